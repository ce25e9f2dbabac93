from netCommands.NetCommand import *

import netio
from hypotests import METHODS, MODULARITY_I, LARGEST_EIGENVALUE, ENTRYWISE_MAXIMUM, \
    recursive_split, community_composition


class NetCommandAnalyze(NetCommand):
    """
    Loads a network, tests it and splits it recursively into
    communities while the test keeps rejecting.

    example:
        analyze --obs votes.csv --alpha 0.01 --max-depth 3
    """

    aliases = ['analyze']

    arg_names = collections.OrderedDict([

    ])

    option_types = collections.OrderedDict([
        ('obs', str),
        ('matrix', str),
        ('corr', str),
        ('alpha', float),
        ('max_depth', int),
        ('min_split', int),
        ('method', str),
        ('companions', str_list),
        ('members', str),
        ('label_column', str),
        ('missing_token', str),
        ('missing_fraction', float),
        ('header', boolean)
    ])

    global_options = True

    required = []

    help = {
        'main': "Recursive community analysis of a network.",
        'args': collections.OrderedDict([
            ('obs', "Observation CSV: correlations between members are the edge weights."),
            ('matrix', "Square CSV matrix used as it is."),
            ('corr', "Square CSV correlation matrix; the off-diagonal is centered and scaled."),
            ('alpha', "Level of the test at every node."),
            ('max_depth', "Deepest level that is split (default 3)."),
            ('min_split', "Smallest community that is tested (default 4)."),
            ('method', "Splitting test: modularity1 (default), modularity2, eigenvalue or entrywise."),
            ('companions', "Comma separated tests also reported at every node "
                           "(default eigenvalue,entrywise; 'none' for none)."),
            ('members', "Observation layout: columns (default) or rows."),
            ('label_column', "Column with a group label per member (members as rows)."),
            ('missing_token', "Cell text of a missing observation (default ?)."),
            ('missing_fraction', "Members with a larger share of missing observations are dropped."),
            ('header', "The observation file has a header row (default true).")
        ]),
        'examples': ['analyze --obs votes.csv --alpha 0.01 --max-depth 3',
                     'analyze --obs house-votes-84.data --members rows --label-column 0 --header false',
                     'analyze --corr landmarks.csv --alpha 0.05']
    }

    def load(self, args):
        """
        :return: (SymmetricMatrix, groups or None, provenance list)
        """

        sources = [key for key in ('obs', 'matrix', 'corr') if key in args]
        if len(sources) != 1:
            self.raise_command_error("Give exactly one of --obs, --matrix or --corr.")

        if 'obs' in args:
            obs = netio.load_observations_csv(
                args['obs'],
                missing_token=self.setting(args, 'missing_token'),
                members=args.get('members', 'columns'),
                label_column=args.get('label_column'),
                header=args.get('header', True),
                missing_fraction=self.setting(args, 'missing_fraction'))
            network = netio.build_correlation_network(obs)
            return network.matrix, network.groups, network.provenance

        if 'corr' in args:
            warnings = []
            network = netio.normalize_network(netio.load_matrix_csv(args['corr'], warnings))
            return network.matrix, None, warnings + network.provenance

        warnings = []
        w = netio.load_matrix_csv(args['matrix'], warnings)
        return w, None, warnings

    def execute(self, args, unnamed_args):

        alpha = self.setting(args, 'alpha')
        max_depth = self.setting(args, 'max_depth')
        min_split = self.setting(args, 'min_split')
        method = args.get('method', MODULARITY_I)
        companions = args.get('companions', [LARGEST_EIGENVALUE, ENTRYWISE_MAXIMUM])
        seed = self.setting(args, 'seed')

        if companions == ['none']:
            companions = []
        for name in [method] + companions:
            if name not in METHODS:
                self.raise_command_error("Unknown test '%s', expected one of %s." % (name, ", ".join(METHODS)))

        w, groups, provenance = self.load(args)

        suite = self.app.make_suite(alpha, seed, [method] + companions)

        with self.app.proc_container.new("Analysis"):
            tree = recursive_split(w, alpha=alpha, max_depth=max_depth, test=method, suite=suite,
                                   min_split=min_split, companions=companions)

        names = w.labels if w.labels is not None else [str(i) for i in range(w.n)]
        membership = tree.membership(w.n)

        results = collections.OrderedDict([
            ("n", w.n),
            ("tree", tree.to_dict()),
            ("membership", collections.OrderedDict(zip(names, membership)))
        ])
        if groups is not None:
            results["composition"] = community_composition(tree, groups)

        warnings = list(provenance)
        for node in tree.walk():
            for note in node.notes:
                warnings.append("%s: %s" % (node.path, note))

        rows = []
        for node in tree.walk():
            row = collections.OrderedDict([("path", node.path), ("depth", node.depth), ("size", node.size)])
            if node.test is not None:
                row.update([("test", node.test.test_name), ("statistic", node.test.statistic),
                            ("critical_value", node.test.critical_value),
                            ("p_value", node.test.p_value.to_json()), ("reject", node.test.reject)])
                for name, result in node.companions.items():
                    row[name + "_statistic"] = result.statistic
                    row[name + "_p_value"] = result.p_value.to_json()
                    row[name + "_reject"] = result.reject
            rows.append(row)

        inputs = collections.OrderedDict([
            ('source', dict((k, args[k]) for k in ('obs', 'matrix', 'corr') if k in args)),
            ('alpha', alpha), ('max_depth', max_depth), ('min_split', min_split),
            ('method', method), ('companions', companions)
        ])

        return self.emit(args, results, rows, inputs, warnings)
