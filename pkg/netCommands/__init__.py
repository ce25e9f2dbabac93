import sys

# allowed command modules (please append them alphabetically ordered)
import netCommands.NetCommandAnalyze
import netCommands.NetCommandCompare
import netCommands.NetCommandCorrelate
import netCommands.NetCommandGetSys
import netCommands.NetCommandHelp
import netCommands.NetCommandListSys
import netCommands.NetCommandPower
import netCommands.NetCommandQuantiles
import netCommands.NetCommandSetSys
import netCommands.NetCommandSimulate
import netCommands.NetCommandTest
import netCommands.NetCommandTw1
import netCommands.NetCommandVersion


def register_all_commands(app, commands):
    """
    Registers all known commands.

    Every command lives in its own module netCommands.NetCommand<Name>
    holding a class of the same name, and has to be imported above.

    :param app: ModNetApp.App
    :param commands: Dictionary of commands being updated
    :return: None
    """

    command_modules = {k: v for k, v in list(sys.modules.items()) if k.startswith('netCommands.NetCommand')}

    for key in sorted(command_modules):
        if key != 'netCommands.NetCommand':
            class_name = key.split('.')[1]
            class_type = getattr(command_modules[key], class_name)
            command_instance = class_type(app)

            for alias in command_instance.aliases:
                commands[alias] = {
                    'fcn': command_instance.execute_wrapper,
                    'help': command_instance.get_decorated_help()
                }
