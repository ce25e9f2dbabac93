import io
import os
import shlex
import shutil
import tempfile
import unittest
from unittest import mock

import simplejson as json

from ModNetApp import App, EXIT_OK, EXIT_USAGE, EXIT_DATA
from distributions import save_tw1_table
import tests.test_netCommands as command_tests
from tests import small_tw1, SHIPPED_TW1


class CliTest(unittest.TestCase):
    """
    Runs command lines through the application. The test methods
    for each command live in tests/test_netCommands and are attached
    to this class below, so all of them share one App.
    """

    @classmethod
    def setUpClass(cls):

        # The table path must come from the defaults, not the environment.
        cls.saved_env = os.environ.pop(App.tw1_env, None)

        cls.folder = tempfile.mkdtemp()
        cls.tw1_path = os.path.join(cls.folder, "tw1.txt")
        save_tw1_table(small_tw1(), cls.tw1_path)

        # Create App, keep app defaults (do not load
        # user-defined defaults).
        cls.app = App(user_defaults=False)

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.folder)
        if cls.saved_env is not None:
            os.environ[App.tw1_env] = cls.saved_env
        del cls.app

    def setUp(self):
        self.app.exec_command_test('set_sys tw1_table %s' % shlex.quote(self.tw1_path))
        self.app.exec_command_test('set_sys convolution_m 2000')
        self.app.exec_command_test('set_sys reps 100')
        self.app.exec_command_test('set_sys threads 1')
        self.app.exec_command_test('set_sys format json')
        self.app.exec_command_test('set_sys seed 0')
        self.app.exec_command_test('set_sys alpha 0.05')
        self.app.exec_command_test('set_sys literal_normal false')

    def path(self, name):
        return os.path.join(self.folder, name)

    def write(self, name, text):
        path = self.path(name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def run_json(self, text):
        """
        Runs a command and parses its JSON report.
        """
        return json.loads(self.app.exec_command_test(text))

    def dispatch(self, argv):
        """
        :return: (exit code, standard output)
        """
        with mock.patch('sys.stdout', new_callable=io.StringIO) as out, \
                mock.patch('sys.stderr', new_callable=io.StringIO):
            code = self.app.dispatch(argv)
        return code, out.getvalue()

    def test_unknown_command(self):
        self.assertRaises(App.CommandError, self.app.exec_command_test, 'bogus')
        self.assertTrue(self.app.exec_command_test('bogus', reraise=False).startswith("ERROR"))

    def test_exit_codes(self):
        self.assertEqual(self.dispatch(['bogus'])[0], EXIT_USAGE)
        self.assertEqual(self.dispatch([])[0], EXIT_USAGE)
        self.assertEqual(self.dispatch(['--help'])[0], EXIT_OK)
        self.assertEqual(self.dispatch(['simulate', '--n', '10', '--law', 'normal', '--reps', '5'])[0],
                         EXIT_USAGE)
        self.assertEqual(self.dispatch(['test', '--input', self.path('missing.csv')])[0], EXIT_DATA)
        self.assertEqual(self.dispatch(['test', '--input', self.write('bad.csv', '0,1,2\n1,0,2\n')])[0],
                         EXIT_DATA)

    def test_dispatch_output(self):
        code, out = self.dispatch(['version'])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("modnet"))

    def test_missing_tw1_table(self):
        missing = self.path("no_such_table.txt")
        self.app.exec_command_test('set_sys tw1_table %s' % shlex.quote(missing))
        self.assertEqual(self.dispatch(['quantiles', '--law', 'tw1', '--probs', '0.5'])[0], EXIT_DATA)
        self.assertFalse(os.path.exists(missing))

        # Laws that do not need TW1 still work.
        self.assertEqual(self.dispatch(['quantiles', '--law', 'normal', '--probs', '0.5'])[0], EXIT_OK)

    def test_shipped_tw1_table(self):
        self.app.defaults["tw1_table"] = None
        with mock.patch.object(self.app, "data_path", self.path("empty_data")):
            self.assertEqual(os.path.realpath(self.app.tw1_table_path()), os.path.realpath(SHIPPED_TW1))
            doc = self.run_json('quantiles --law tw1 --probs 0.95')
            self.assertAlmostEqual(doc["results"]["quantiles"][0][1], 0.9793, delta=2e-3)
            self.assertEqual(doc["results"]["law"]["method"], "fredholm")

            # The tw1 command writes to the data folder, never over the shipped table.
            self.assertEqual(self.app.tw1_output_path(), os.path.join(self.path("empty_data"), "tw1_table.txt"))

    def test_process_tracking(self):
        container = self.app.proc_container
        with container.new("Work") as proc:
            self.assertEqual(proc.status, "Active")
            self.assertEqual(len(container.procs), 1)
        self.assertEqual(proc.status, "Done")
        self.assertEqual(len(container.procs), 0)

        try:
            with container.new("Broken") as proc:
                raise ValueError("stop")
        except ValueError:
            pass
        self.assertEqual(proc.status, "Failed")
        self.assertEqual(len(container.procs), 0)

    def test_option_needs_value(self):
        self.assertRaises(App.CommandError, self.app.exec_command_test, 'simulate --n')

    def test_unknown_option(self):
        self.assertRaises(App.CommandError, self.app.exec_command_test, 'simulate --colour red')

    def test_bad_option_value(self):
        self.assertRaises(App.CommandError, self.app.exec_command_test, 'simulate --n ten')


for name, fcn in sorted(vars(command_tests).items()):
    if name.startswith('test_') and callable(fcn):
        setattr(CliTest, name, fcn)


if __name__ == '__main__':
    unittest.main()
