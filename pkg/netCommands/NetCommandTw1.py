from netCommands.NetCommand import *


class NetCommandTw1(NetCommand):
    """
    Generates the Tracy-Widom table and saves it.

    example:
        tw1 --m 100000 --n-gen 2000
    """

    aliases = ['tw1']

    arg_names = collections.OrderedDict([

    ])

    option_types = collections.OrderedDict([
        ('m', int),
        ('n_gen', int),
        ('method', str),
        ('table', str),
        ('threads', int),
        ('seed', int)
    ])

    required = []

    help = {
        'main': "Generates a TW1 table from GOE largest eigenvalues. Until one is written "
                "the exact table shipped with modnet is used.",
        'args': collections.OrderedDict([
            ('m', "Number of draws (default 100000)."),
            ('n_gen', "GOE dimension (default 2000)."),
            ('method', "tridiagonal (default) or dense."),
            ('table', "Output file (default: the tw1_table setting, else ~/.modnet/tw1_table.txt)."),
            ('threads', "Worker threads, 0 for one per processor."),
            ('seed', "Generation seed (default: the tw1_seed setting).")
        ]),
        'examples': ['tw1 --m 100000 --n-gen 2000',
                     'tw1 --m 10000 --n-gen 500 --table small_tw1.txt']
    }

    def execute(self, args, unnamed_args):

        path = args.get('table', self.app.tw1_output_path())

        law = self.app.generate_tw1(path, m=args.get('m'), n_gen=args.get('n_gen'),
                                    method=args.get('method'), seed=args.get('seed'),
                                    threads=args.get('threads'))

        # Use the new table from now on if it replaced the current one.
        if path == self.app.tw1_table_path():
            self.app.tw1 = law
            self.app.tw1_path = path
            self.app.laws = {}

        info = law.describe()
        return "TW1 table %s: m=%d n_gen=%d mean=%.4f sd=%.4f" % \
               (path, info["m"], info["n_gen"], info["mean"], info["sd"])
