from netCommands.NetCommand import *

import netio
from spectral import modularity
from hypotests import METHODS, MODULARITY_I


class NetCommandTest(NetCommand):
    """
    Runs a test on a matrix read from a CSV file.

    example:
        test --input w.csv --method modularity2 --alpha 0.05
    """

    aliases = ['test']

    arg_names = collections.OrderedDict([

    ])

    option_types = collections.OrderedDict([
        ('input', str),
        ('method', str),
        ('alpha', float)
    ])

    global_options = True

    required = ['input']

    help = {
        'main': "Tests a weighted network, given as a CSV matrix, for community structure.",
        'args': collections.OrderedDict([
            ('input', "Square CSV matrix, optional header row of labels."),
            ('method', "modularity1 (default), modularity2, eigenvalue, entrywise or all."),
            ('alpha', "Level of the test.")
        ]),
        'examples': ['test --input w.csv --method modularity2 --alpha 0.05',
                     'test --input w.csv --method all']
    }

    def execute(self, args, unnamed_args):

        method = args.get('method', MODULARITY_I)
        alpha = self.setting(args, 'alpha')
        seed = self.setting(args, 'seed')

        methods = list(METHODS) if method == 'all' else [method]
        if methods[0] not in METHODS:
            self.raise_command_error("Unknown test '%s', expected one of %s or all." %
                                     (method, ", ".join(METHODS)))

        warnings = []
        w = netio.load_matrix_csv(args['input'], warnings)
        md = modularity(w)
        warnings.extend(md.notes)

        suite = self.app.make_suite(alpha, seed, methods)
        tests = suite.run_all(w, md, methods)

        results = collections.OrderedDict([
            ("n", w.n),
            ("modularity", md.to_dict()),
            ("tests", [result.to_dict() for result in tests.values()])
        ])

        rows = []
        for result in tests.values():
            row = result.to_dict()
            row.pop("law")
            row["notes"] = "; ".join(row["notes"])
            rows.append(row)

        inputs = collections.OrderedDict([('input', args['input']), ('method', method), ('alpha', alpha)])

        return self.emit(args, results, rows, inputs, warnings)
