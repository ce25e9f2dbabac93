from netCommands.NetCommand import *

import simharness

COMPARISON_REPS = 3000


class NetCommandCompare(NetCommand):
    """
    Percentiles of Q/n and of the centered statistics under the
    null and under the spiked model.

    example:
        compare --n 50,100,150,200 --beta-scale 2
    """

    aliases = ['compare']

    arg_names = collections.OrderedDict([

    ])

    option_types = collections.OrderedDict([
        ('n', int_list),
        ('beta_scale', float)
    ])

    global_options = True

    required = []

    help = {
        'main': "Compares the modularity statistics under the null and the spiked model.",
        'args': collections.OrderedDict([
            ('n', "Comma separated even dimensions (default 50,100,150,200)."),
            ('beta_scale', "Spike strength beta in units of sqrt(n) (default 2).")
        ]),
        'examples': ['compare --n 50,100,150,200 --beta-scale 2 --format csv']
    }

    def execute(self, args, unnamed_args):

        n_values = args.get('n', list(simharness.COMPARISON_N))
        beta_scale = args.get('beta_scale', 2.0)
        seed = self.setting(args, 'seed')
        reps = args.get('reps', COMPARISON_REPS)

        with self.app.proc_container.new("Comparison study"):
            report = simharness.run_comparison_study(
                n_values=n_values, reps=reps, beta_scale=beta_scale, seed=seed,
                worker=self.app.make_worker(self.setting(args, 'threads'), "compare"))

        inputs = collections.OrderedDict([('n', n_values), ('beta_scale', beta_scale), ('reps', reps)])

        return self.emit(args, report.to_dict(), report.to_rows(), inputs)
