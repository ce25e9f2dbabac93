import collections
import re

import ModNetApp
import ModNetVersion
import netio


def int_list(text):
    """
    "50,100,500" -> [50, 100, 500]
    """
    return [int(v) for v in str(text).split(",") if v.strip()]


def float_list(text):
    return [float(v) for v in str(text).split(",") if v.strip()]


def str_list(text):
    return [v.strip() for v in str(text).split(",") if v.strip()]


def boolean(text):
    words = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}
    try:
        return words[str(text).strip().lower()]
    except KeyError:
        raise ValueError("expected true or false, got '%s'" % text)


class NetCommand(object):

    # ModNetApp
    app = None

    # Logger
    log = None

    # List of all command aliases, the first one is the
    # name used on the command line.
    aliases = []

    # Positional arguments and their types, in order.
    arg_names = collections.OrderedDict([
        ('name', str)
    ])

    # Options like --option-name value. Dashes in names map to
    # underscores in the argument dictionary.
    option_types = collections.OrderedDict()

    # Accepts --seed, --reps, --threads, --out, --format and --verbose.
    global_options = False

    # Mandatory arguments and options.
    required = ['name']

    # Structured help for the command, args needs to be ordered
    help = {
        'main': "undefined help.",
        'args': collections.OrderedDict([
            ('argumentname', 'undefined help.'),
            ('optionname', 'undefined help.')
        ]),
        'examples': []
    }

    global_option_types = collections.OrderedDict([
        ('seed', int),
        ('reps', int),
        ('threads', int),
        ('out', str),
        ('format', str),
        ('verbose', int)
    ])

    global_help = collections.OrderedDict([
        ('seed', "Root seed of all random streams."),
        ('reps', "Monte Carlo replicates per cell."),
        ('threads', "Worker threads, 0 for one per processor."),
        ('out', "Write the report to this file instead of the standard output."),
        ('format', "Report format: json or csv."),
        ('verbose', "0 warnings, 1 progress, 2 debug.")
    ])

    # Original incoming arguments into command
    original_args = None

    def __init__(self, app):
        self.app = app

        if self.app is None:
            raise TypeError('Expected app to be ModNetApp instance.')

        if not isinstance(self.app, ModNetApp.App):
            raise TypeError('Expected ModNetApp, got %s.' % type(app))

        self.log = self.app.log

    def raise_command_error(self, text):
        self.app.raise_command_error(text)

    def get_current_command(self):
        """
        The command line as it was received.
        """

        command_string = [self.aliases[0]]

        if self.original_args is not None:
            for arg in self.original_args:
                command_string.append(arg)

        return " ".join(command_string)

    def all_option_types(self):
        types = collections.OrderedDict(self.option_types)
        if self.global_options:
            types.update(self.global_option_types)
        return types

    def get_decorated_help(self):
        """
        Help text: description, synopsis, arguments and examples.
        """

        option_types = self.all_option_types()
        descriptions = collections.OrderedDict(self.help['args'])
        if self.global_options:
            descriptions.update(self.global_help)

        def decorated_argument(key, text, in_command=False):
            if key in self.arg_names:
                name = key
                type_name = self.arg_names[key].__name__
            else:
                name = "--" + key.replace('_', '-')
                type_name = option_types[key].__name__ if key in option_types else '?'
                name = name + " <" + type_name + ">"

            if in_command:
                return name if key in self.required else "[" + name + "]"

            if key in self.required:
                return "\t%s: %s" % (name, text)
            return "\t[%s: %s]" % (name, text)

        help_string = [self.help['main']]
        for alias in self.aliases:
            help_string.append("> " + alias + " " +
                               " ".join(decorated_argument(k, t, True) for k, t in descriptions.items()))

        for key, value in descriptions.items():
            help_string.append(decorated_argument(key, value))

        for example in self.help['examples']:
            help_string.append("> " + example)

        return "\n".join(help_string)

    @staticmethod
    def parse_arguments(args):
        """
        Splits '--keyword value' pairs into a dictionary and keeps
        the standalone parameters in a list.

        :param args: Command line words after the command name.
        :return: arguments, options
        """

        options = collections.OrderedDict()
        arguments = []
        name = None
        for word in args:
            match = re.search(r'^--?([a-zA-Z][\w-]*)$', word)
            if match and name is None:
                name = match.group(1).replace('-', '_')
                continue

            if name is None:
                arguments.append(word)
            else:
                options[name] = word
                name = None

        if name is not None:
            raise ModNetApp.App.CommandError("Option '--%s' needs a value." % name.replace('_', '-'))

        return arguments, options

    def check_args(self, args):
        """
        Casts arguments and options to their types.

        :param args: Command line words.
        :return: named_args, unnamed_args
        """

        try:
            arguments, options = self.parse_arguments(args)
        except ModNetApp.App.CommandError as e:
            self.raise_command_error(str(e))

        option_types = self.all_option_types()
        named_args = {}
        unnamed_args = []

        # check arguments
        idx = 0
        arg_names_items = list(self.arg_names.items())
        for argument in arguments:
            if len(self.arg_names) > idx:
                key, arg_type = arg_names_items[idx]
                try:
                    named_args[key] = arg_type(argument)
                except Exception as e:
                    self.raise_command_error("Cannot cast argument '%s' to type %s with exception '%s'."
                                             % (key, arg_type.__name__, str(e)))
            else:
                unnamed_args.append(argument)
            idx += 1

        # check options
        for key in options:
            if key not in option_types:
                self.raise_command_error('Unknown parameter: --%s' % key.replace('_', '-'))
            try:
                named_args[key] = option_types[key](options[key])
            except Exception as e:
                self.raise_command_error("Cannot cast option '--%s' to type '%s' with exception '%s'."
                                         % (key.replace('_', '-'), option_types[key].__name__, str(e)))

        # check required arguments
        for key in self.required:
            if key not in named_args:
                self.raise_command_error("Missing required argument '%s'." % key)

        return named_args, unnamed_args

    def execute_wrapper(self, *args):
        """
        Entry point called by the application for this command.
        Parses and checks the arguments, applies --verbose and runs
        execute().

        :param args: Command line words after the command name.
        :return: None or output text
        """

        self.log.debug("Command '%s' executed." % str(self.__class__.__name__))
        self.original_args = args
        args, unnamed_args = self.check_args(args)

        if 'verbose' in args:
            ModNetVersion.set_verbosity(self.app, args['verbose'])

        try:
            return self.execute(args, unnamed_args)
        except self.app.CommandError:
            raise
        except Exception:
            self.log.error("Command '%s' failed." % self.get_current_command())
            raise

    def execute(self, args, unnamed_args):
        """
        Direct execute of command, implemented in each descendant.

        :param args: Dictionary of known named arguments and options.
        :param unnamed_args: Other positional values.
        :return: None or output text
        """

        raise NotImplementedError("Please Implement this method")

    ###############
    ## Helpers ###
    ###############

    def setting(self, args, key):
        """
        Option value if given, the application default otherwise.
        """

        if key in args:
            return args[key]
        return self.app.defaults[key]

    def emit(self, args, results, rows, inputs=None, warnings=None):
        """
        Formats a report and writes it to --out, or returns it.

        :param args: Parsed arguments.
        :param results: JSON-ready results.
        :param rows: Flat rows for CSV output.
        :param inputs: Parameters recorded in the report.
        :param warnings: Messages recorded in the report.
        :return: Report text, or None when written to a file.
        """

        fmt = self.setting(args, 'format')
        if fmt not in ("json", "csv"):
            self.raise_command_error("Unknown format '%s', expected json or csv." % fmt)

        meta = {
            "seed": self.setting(args, 'seed'),
            "inputs": inputs or {},
            "warnings": list(warnings or [])
        }

        out = self.setting(args, 'out')
        if out:
            netio.write_report(results, rows, out, fmt, meta)
            return None

        return netio.format_report(results, rows, fmt, meta)
