def test_version(self):
    """
    :param self:
    :return:
    """

    text = self.app.exec_command_test('version')
    self.assertTrue(text.startswith("modnet 1.0"))
    self.assertIn("(2026/10)", text)


def test_help(self):
    """
    Usage overview and per-command help.
    :param self:
    :return:
    """

    usage = self.app.exec_command_test('help')
    for name in ("analyze", "compare", "correlate", "power", "quantiles", "simulate", "test", "tw1"):
        self.assertIn(name, usage)

    text = self.app.exec_command_test('help simulate')
    self.assertIn("--n <int_list>", text)
    self.assertIn("--seed <int>", text)

    self.assertRaises(self.app.CommandError, self.app.exec_command_test, 'help bogus')
