from netCommands.NetCommand import *


class NetCommandSetSys(NetCommand):
    """
    Sets the value of a system variable and saves the defaults.

    example:
        set_sys reps 5000
    """

    aliases = ['set_sys', 'setsys']

    arg_names = collections.OrderedDict([
        ('name', str),
        ('value', str)
    ])

    option_types = collections.OrderedDict([

    ])

    required = ['name', 'value']

    help = {
        'main': "Sets the value of the system variable.",
        'args': collections.OrderedDict([
            ('name', 'Name of the system variable.'),
            ('value', 'Value to set; true, false and none are understood.')
        ]),
        'examples': ['set_sys reps 5000',
                     'set_sys tw1_table /data/tw1_table.txt',
                     'set_sys literal_normal true']
    }

    def execute(self, args, unnamed_args):

        param = args['name']

        if param not in self.app.defaults:
            self.raise_command_error("No such system parameter \"{}\".".format(param))

        try:
            value = self.app.defaults.coerce(param, args['value'])
        except ValueError as e:
            self.raise_command_error("Bad value for %s: %s" % (param, str(e)))

        self.app.defaults[param] = value
        self.app.save_defaults()
