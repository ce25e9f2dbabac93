from netCommands.NetCommand import *

import simharness


class NetCommandCorrelate(NetCommand):
    """
    Decorrelation study under the GOE.

    example:
        correlate --n 50,500 --reps 5000
    """

    aliases = ['correlate']

    arg_names = collections.OrderedDict([

    ])

    option_types = collections.OrderedDict([
        ('n', int_list),
        ('scatter', boolean),
        ('scatter_cap', int)
    ])

    global_options = True

    required = []

    help = {
        'main': "Correlations between A_n and B_n and between Q/n and the largest eigenvalue.",
        'args': collections.OrderedDict([
            ('n', "Comma separated dimensions (default 50,100,500,1000)."),
            ('scatter', "Emit the (Q/n, n^1/6 (lambda_1 - 2 sqrt(n))) pairs instead of the correlations."),
            ('scatter_cap', "Pairs kept per dimension (default 5000).")
        ]),
        'examples': ['correlate --n 50,500 --reps 5000',
                     'correlate --n 500 --scatter true --format csv --out scatter.csv']
    }

    def execute(self, args, unnamed_args):

        n_values = args.get('n', list(simharness.CORRELATION_N))
        scatter_cap = self.setting(args, 'scatter_cap')
        seed = self.setting(args, 'seed')
        reps = self.setting(args, 'reps')

        with self.app.proc_container.new("Correlation study"):
            report = simharness.run_correlation_study(
                n_values=n_values, reps=reps, seed=seed,
                worker=self.app.make_worker(self.setting(args, 'threads'), "correlate"),
                scatter_cap=scatter_cap)

        inputs = collections.OrderedDict([('n', n_values), ('reps', reps), ('scatter_cap', scatter_cap)])

        rows = report.scatter_rows() if args.get('scatter', False) else report.to_rows()
        return self.emit(args, report.to_dict(), rows, inputs)
