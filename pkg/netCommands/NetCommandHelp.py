from netCommands.NetCommand import *


class NetCommandHelp(NetCommand):
    """
    Shows the list of commands or the help of one command.

    example:
        help analyze
    """

    aliases = ['help']

    arg_names = collections.OrderedDict([
        ('command', str)
    ])

    option_types = collections.OrderedDict([

    ])

    required = []

    help = {
        'main': "Shows the commands, or the options of one command.",
        'args': collections.OrderedDict([
            ('command', 'Name of a command.')
        ]),
        'examples': ['help', 'help simulate']
    }

    def execute(self, args, unnamed_args):

        if 'command' not in args:
            return self.app.usage()

        name = args['command']
        if name not in self.app.commands:
            self.raise_command_error("Unknown command: %s" % name)

        return self.app.commands[name]['help']
