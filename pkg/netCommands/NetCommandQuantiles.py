from netCommands.NetCommand import *

from distributions import NormalLimit, GumbelCoherence

DEFAULT_PROBS = [0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99]


class NetCommandQuantiles(NetCommand):
    """
    Quantiles (and optionally cdf values) of a reference law.

    example:
        quantiles --law f --n 500 --probs 0.01,0.05,0.5,0.95
    """

    aliases = ['quantiles']

    arg_names = collections.OrderedDict([

    ])

    option_types = collections.OrderedDict([
        ('law', str),
        ('n', int),
        ('probs', float_list),
        ('at', float_list)
    ])

    global_options = True

    required = ['law']

    help = {
        'main': "Prints quantiles of a reference law: normal, tw1, f or gumbel.",
        'args': collections.OrderedDict([
            ('law', "normal, tw1, f (needs --n) or gumbel."),
            ('n', "Dimension of the convolution law f."),
            ('probs', "Comma separated probabilities (default 0.01,...,0.99)."),
            ('at', "Comma separated points at which to also report the cdf.")
        ]),
        'examples': ['quantiles --law normal',
                     'quantiles --law f --n 500 --probs 0.01,0.05,0.5,0.95']
    }

    def execute(self, args, unnamed_args):

        name = args['law']
        probs = args.get('probs', DEFAULT_PROBS)
        points = args.get('at', [])

        if name == 'normal':
            law = NormalLimit()
        elif name == 'gumbel':
            law = GumbelCoherence()
        elif name == 'tw1':
            law = self.app.get_tw1()
        elif name == 'f':
            if 'n' not in args:
                self.raise_command_error("Law f needs --n.")
            law = self.app.get_laws(self.setting(args, 'seed')).get(args['n'])
        else:
            self.raise_command_error("Unknown law '%s', expected normal, tw1, f or gumbel." % name)

        rows = []
        for p in probs:
            rows.append(collections.OrderedDict([("law", name), ("p", p), ("quantile", float(law.quantile(p)))]))
        for x in points:
            rows.append(collections.OrderedDict([("law", name), ("x", x), ("cdf", float(law.cdf(x)))]))

        results = collections.OrderedDict([
            ("law", law.describe()),
            ("quantiles", [[p, float(law.quantile(p))] for p in probs]),
            ("cdf", [[x, float(law.cdf(x))] for x in points])
        ])

        inputs = collections.OrderedDict([('law', name), ('n', args.get('n')), ('probs', probs), ('at', points)])

        return self.emit(args, results, rows, inputs)
