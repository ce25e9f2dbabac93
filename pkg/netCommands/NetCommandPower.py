from netCommands.NetCommand import *

import simharness
from hypotests import METHODS


class NetCommandPower(NetCommand):
    """
    Rejection rates of the four tests under the balanced
    two-community spiked model.

    example:
        power --n 200,400 --alpha 0.05
    """

    aliases = ['power']

    arg_names = collections.OrderedDict([

    ])

    option_types = collections.OrderedDict([
        ('n', int_list),
        ('alpha', float),
        ('beta_scale', float),
        ('heterogeneity', boolean),
        ('methods', str_list)
    ])

    global_options = True

    required = []

    help = {
        'main': "Runs a power study of the four tests under the spiked model.",
        'args': collections.OrderedDict([
            ('n', "Comma separated even dimensions (default 50,100,200,400,600,800)."),
            ('alpha', "Level of the tests."),
            ('beta_scale', "Spike strength beta in units of sqrt(n) (default 1, 0 for the null)."),
            ('heterogeneity', "Add the uniform diagonal heterogeneity (default true)."),
            ('methods', "Comma separated tests: modularity1, modularity2, eigenvalue, entrywise.")
        ]),
        'examples': ['power --n 200,400 --alpha 0.05',
                     'power --n 400 --beta-scale 0 --heterogeneity false']
    }

    def execute(self, args, unnamed_args):

        n_values = args.get('n', list(simharness.POWER_N))
        alpha = self.setting(args, 'alpha')
        beta_scale = args.get('beta_scale', 1.0)
        heterogeneity = args.get('heterogeneity', True)
        methods = args.get('methods', list(METHODS))
        seed = self.setting(args, 'seed')
        reps = self.setting(args, 'reps')

        for method in methods:
            if method not in METHODS:
                self.raise_command_error("Unknown test '%s', expected one of %s." % (method, ", ".join(METHODS)))

        suite = self.app.make_suite(alpha, seed, methods)

        with self.app.proc_container.new("Power study"):
            report = simharness.run_power_study(
                n_values=n_values, alpha=alpha, reps=reps, seed=seed, suite=suite,
                worker=self.app.make_worker(self.setting(args, 'threads'), "power"),
                beta_scale=beta_scale, heterogeneity=heterogeneity, methods=methods)

        inputs = collections.OrderedDict([
            ('n', n_values), ('alpha', alpha), ('beta_scale', beta_scale),
            ('heterogeneity', heterogeneity), ('methods', methods), ('reps', reps)
        ])

        return self.emit(args, report.to_dict(), report.to_rows(), inputs)
