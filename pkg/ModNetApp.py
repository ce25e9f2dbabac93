############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

import collections
import logging
import os
import shlex
import sys
import traceback

import simplejson as json

import ModNetVersion
from ModNetCommon import LoudDict, InvalidParameterError, DataError, NumericalError
from ModNetProcess import MNProcess, MNProcessContainer
from ModNetWorker import Worker
from ensembles import Seed
from distributions import load_tw1_table, save_tw1_table, build_tw1_table, LawCache
from hypotests import TestSuite, MODULARITY_II, LARGEST_EIGENVALUE
import netCommands

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3


class App(object):
    """
    The main application class. Holds the defaults, the reference
    laws and the registered commands, and runs command lines.
    """

    ## Logging ##
    log = logging.getLogger('modnet')
    log.setLevel(logging.DEBUG)
    formatter = logging.Formatter('[%(levelname)s][%(threadName)s] %(message)s')
    handler = logging.StreamHandler()
    handler.setFormatter(formatter)
    log.addHandler(handler)

    ## Version
    version = 1.0
    version_date = (0, 0, 0)
    version_name = None

    # Folder holding this file and the shipped share/ data.
    app_home = os.path.dirname(os.path.realpath(__file__))

    # Environment variable that overrides the TW1 table path.
    tw1_env = "MODNET_TW1_TABLE"

    @property
    def version_date_str(self):
        return "{:4d}/{:02d}".format(
            self.version_date[0],
            self.version_date[1]
        )

    class CommandError(Exception):
        """
        Raised by commands on usage errors (bad or missing options).
        """
        pass

    def __init__(self, user_defaults=True):
        """
        :param user_defaults: Read and write the user's defaults.json.
            Tests pass False to work with the built-in defaults only.
        """

        ModNetVersion.setup(self)

        App.log.info("modnet Starting...")

        self.user_defaults = user_defaults

        # Folder for user settings and the cached TW1 table.
        self.data_path = os.path.expanduser('~') + '/.modnet'

        if user_defaults:
            if not os.path.exists(self.data_path):
                os.makedirs(self.data_path)
                App.log.debug('Created data folder: ' + self.data_path)

            try:
                f = open(self.data_path + '/defaults.json')
                f.close()
            except IOError:
                App.log.debug('Creating empty defaults.json')
                f = open(self.data_path + '/defaults.json', 'w')
                json.dump({}, f)
                f.close()

        ####################
        ##   Defaults    ###
        ####################

        self.defaults = LoudDict()
        self.defaults.set_change_callback(self.on_defaults_dict_change)
        self.defaults.update({
            "seed": 0,
            "reps": 2000,
            "threads": 0,
            "alpha": 0.05,
            "format": "json",
            "out": None,
            "verbose": 0,
            "tw1_table": None,
            "tw1_m": 100000,
            "tw1_n_gen": 2000,
            "tw1_method": "tridiagonal",
            "tw1_seed": 1,
            "convolution_m": 100000,
            "max_depth": 3,
            "min_split": 4,
            "missing_token": "?",
            "missing_fraction": 0.5,
            "literal_normal": False,
            "entrywise_matrix": "covariance",
            "scatter_cap": 5000,
            "csv_digits": 17
        })

        if user_defaults:
            self.load_defaults()

        ##############
        ## Process ###
        ##############

        MNProcess.app = self
        MNProcessContainer.app = self
        self.proc_container = MNProcessContainer()

        # Reference laws, built on first request.
        self.tw1 = None
        self.tw1_path = None
        self.laws = {}

        ################
        ## Commands ###
        ################

        self.commands = collections.OrderedDict()
        netCommands.register_all_commands(self, self.commands)

        App.log.debug("%d commands registered." % len(self.commands))

    def on_defaults_dict_change(self, field):
        self.log.debug("Default changed: %s = %s" % (field, self.defaults[field]))

        # The laws depend on these.
        if field == "tw1_table":
            self.tw1 = None
            self.laws = {}
        elif field == "convolution_m":
            self.laws = {}

    def load_defaults(self):
        """
        Loads the user's settings from defaults.json into
        ``self.defaults``.

        :return: None
        """

        try:
            f = open(self.data_path + "/defaults.json")
            options = f.read()
            f.close()
        except IOError:
            self.log.error("Could not load defaults file.")
            return

        try:
            defaults = json.loads(options)
        except json.JSONDecodeError as e:
            App.log.error("Failed to parse defaults file: %s" % str(e))
            return

        self.defaults.update(defaults)

    def save_defaults(self):
        """
        Saves ``self.defaults`` to defaults.json. Does nothing when the
        application was started without user defaults.

        :return: None
        """

        if not self.user_defaults:
            self.log.debug("save_defaults(): user defaults disabled, not saving.")
            return

        try:
            f = open(self.data_path + "/defaults.json", "w")
            json.dump(dict(self.defaults), f, indent=2, sort_keys=True)
            f.close()
        except IOError:
            self.log.error("Failed to write defaults to file.")
            return

        self.log.info("Defaults saved.")

    def raise_command_error(self, text):
        """
        :param text: Message for the user.
        :return: Never returns.
        """

        raise self.CommandError(text)

    ############################
    ## Laws, suites, workers ###
    ############################

    def tw1_output_path(self):
        """
        Where the tw1 command writes by default: the environment
        variable, then the tw1_table default, then the data folder.
        """

        path = os.environ.get(self.tw1_env)
        if path:
            return path
        if self.defaults["tw1_table"]:
            return self.defaults["tw1_table"]
        return os.path.join(self.data_path, "tw1_table.txt")

    def tw1_table_path(self):
        """
        The table the tests use. A configured path is used as is. Without
        one, a table in the data folder wins over the one shipped with
        modnet.
        """

        path = self.tw1_output_path()
        if os.environ.get(self.tw1_env) or self.defaults["tw1_table"] or os.path.exists(path):
            return path

        for folder in self.share_folders():
            shipped = os.path.join(folder, "tw1_table.txt")
            if os.path.exists(shipped):
                return shipped
        return os.path.join(self.share_folders()[0], "tw1_table.txt")

    def share_folders(self):
        """
        Folders that may hold the shipped data: next to the sources,
        then the installed data_files location.
        """

        return [os.path.join(self.app_home, "share"),
                os.path.join(sys.prefix, "share", "modnet")]

    def get_tw1(self):
        """
        The TW1 law, loaded from the table file. Tables are only
        generated by the tw1 command.

        :return: distributions.TW1Law
        """

        path = self.tw1_table_path()
        if self.tw1 is not None and self.tw1_path == path:
            return self.tw1

        if not os.path.exists(path):
            raise DataError("No TW1 table at %s. Point the tw1_table setting or %s at a table, "
                            "or write one with the tw1 command." % (path, self.tw1_env))

        self.tw1 = load_tw1_table(path)
        self.tw1_path = path
        return self.tw1

    def generate_tw1(self, path, m=None, n_gen=None, method=None, seed=None, threads=None):
        m = self.defaults["tw1_m"] if m is None else m
        n_gen = self.defaults["tw1_n_gen"] if n_gen is None else n_gen
        method = self.defaults["tw1_method"] if method is None else method
        seed = self.defaults["tw1_seed"] if seed is None else seed

        with self.proc_container.new("TW1 table"):
            law = build_tw1_table(m, n_gen, Seed(seed), method=method,
                                  worker=self.make_worker(threads, "tw1"))

        folder = os.path.dirname(path)
        try:
            if folder and not os.path.exists(folder):
                os.makedirs(folder)
            save_tw1_table(law, path)
        except (IOError, OSError) as e:
            self.log.warning("Could not save TW1 table to %s: %s" % (path, str(e)))

        return law

    def get_laws(self, seed):
        """
        Convolution laws for one root seed, shared by all commands
        run with that seed.

        :return: distributions.LawCache
        """

        key = (int(seed), self.defaults["convolution_m"])
        if key not in self.laws:
            self.laws[key] = LawCache(self.get_tw1(), Seed(int(seed)), m=self.defaults["convolution_m"])
        return self.laws[key]

    def make_suite(self, alpha, seed, methods):
        """
        Test suite holding only the laws ``methods`` need.
        """

        needs_tw1 = LARGEST_EIGENVALUE in methods or MODULARITY_II in methods
        return TestSuite(alpha=alpha,
                         tw1=self.get_tw1() if needs_tw1 else None,
                         laws=self.get_laws(seed) if MODULARITY_II in methods else None,
                         literal_normal=self.defaults["literal_normal"],
                         entrywise_matrix=self.defaults["entrywise_matrix"])

    def make_worker(self, threads=None, name=None):
        if threads is None:
            threads = self.defaults["threads"]
        return Worker(app=self, threads=threads, name=name)

    ##################
    ## Command line ##
    ##################

    def usage(self):
        lines = ["Usage: modnet <command> [arguments] [--option value ...]", "", "Commands:"]
        for name, command in self.commands.items():
            lines.append("  %-12s %s" % (name, command["help"].split("\n")[0]))
        lines.append("")
        lines.append("Use 'modnet help <command>' for the options of a command.")
        return "\n".join(lines)

    def exec_command_test(self, text, reraise=True):
        """
        Runs one command line given as text.

        :param text: Command and its arguments, shell quoting allowed.
        :param reraise: Re-raise exceptions (for unittests); otherwise the
            error message is returned.
        :return: Output from the command
        """

        return self.exec_argv(shlex.split(str(text)), reraise)

    def exec_argv(self, argv, reraise=True):
        try:
            if not argv:
                self.raise_command_error("No command given.")

            name = argv[0]
            if name not in self.commands:
                self.raise_command_error("Unknown command: %s" % name)

            return self.commands[name]["fcn"](*argv[1:])

        except Exception as e:
            self.log.error("Exec command Exception: %s" % str(e))
            if reraise:
                raise
            return "ERROR: %s" % str(e)

    def dispatch(self, argv):
        """
        Runs a command line and maps failures to exit codes:
        1 usage, 2 data, 3 numerical.

        :param argv: Arguments without the program name.
        :return: Exit code.
        """

        if not argv or argv[0] in ("-h", "--help"):
            sys.stdout.write(self.usage() + "\n")
            return EXIT_OK if argv else EXIT_USAGE

        try:
            result = self.exec_argv(argv, reraise=True)

        except self.CommandError as e:
            sys.stderr.write("ERROR: %s\n" % str(e))
            if argv[0] not in self.commands:
                sys.stderr.write(self.usage() + "\n")
            return EXIT_USAGE

        except InvalidParameterError as e:
            sys.stderr.write("ERROR: %s\n" % str(e))
            return EXIT_USAGE

        except (DataError, IOError) as e:
            sys.stderr.write("ERROR: %s\n" % str(e))
            return EXIT_DATA

        except NumericalError as e:
            sys.stderr.write("ERROR: %s\n" % str(e))
            return EXIT_NUMERICAL

        except Exception as e:
            sys.stderr.write("ERROR: %s\n%s" % (str(e), traceback.format_exc()))
            return EXIT_USAGE

        if result is not None:
            text = str(result)
            sys.stdout.write(text if text.endswith("\n") else text + "\n")

        return EXIT_OK


def main(argv=None):
    app = App()
    ModNetVersion.set_verbosity(app, app.defaults["verbose"])
    return app.dispatch(sys.argv[1:] if argv is None else argv)
