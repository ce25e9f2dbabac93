from netCommands.NetCommand import *

import simharness


class NetCommandSimulate(NetCommand):
    """
    Calibration study: rate at which the normalized modularity exceeds
    the upper alpha critical value of a reference law.

    example:
        simulate --ensemble goe --n 500 --reps 2000 --law f --seed 7
    """

    aliases = ['simulate']

    arg_names = collections.OrderedDict([

    ])

    option_types = collections.OrderedDict([
        ('ensemble', str),
        ('n', int_list),
        ('alphas', float_list),
        ('law', str),
        ('p', float),
        ('N', int),
        ('beta_scale', float)
    ])

    global_options = True

    required = []

    help = {
        'main': "Runs a calibration study of the normalized modularity.",
        'args': collections.OrderedDict([
            ('ensemble', "goe, exp, er, corr or spiked (default goe)."),
            ('n', "Comma separated dimensions (default 50,100,500,1000,2000,5000)."),
            ('alphas', "Comma separated levels (default 0.01,0.05,0.25,0.5,0.75,0.95,0.99)."),
            ('law', "Reference law: normal or f (default f)."),
            ('p', "Edge probability of the er ensemble (default n^-1/4)."),
            ('N', "Sample count of the corr ensemble (default n^5/2)."),
            ('beta_scale', "Spike strength of the spiked ensemble in units of sqrt(n).")
        ]),
        'examples': ['simulate --ensemble goe --n 500 --reps 2000 --law f --seed 7',
                     'simulate --ensemble er --n 100,500 --law normal --format csv']
    }

    def execute(self, args, unnamed_args):

        ensemble = args.get('ensemble', 'goe')
        n_values = args.get('n', list(simharness.CALIBRATION_N))
        alphas = args.get('alphas', list(simharness.CALIBRATION_ALPHAS))
        law = args.get('law', 'f')
        seed = self.setting(args, 'seed')
        reps = self.setting(args, 'reps')

        params = {'p': args.get('p'), 'N': args.get('N'), 'beta_scale': args.get('beta_scale')}

        with self.app.proc_container.new("Calibration"):
            report = simharness.run_calibration(
                ensemble, n_values=n_values, alphas=alphas, reps=reps, law=law, seed=seed,
                worker=self.app.make_worker(self.setting(args, 'threads'), "simulate"),
                laws=self.app.get_laws(seed) if law == 'f' else None,
                params=params)

        inputs = collections.OrderedDict([
            ('ensemble', ensemble), ('n', n_values), ('alphas', alphas), ('law', law), ('reps', reps),
            ('params', dict((k, v) for k, v in params.items() if v is not None))
        ])

        return self.emit(args, report.to_dict(), report.to_rows(), inputs)
