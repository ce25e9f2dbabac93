def test_set_get_sys(self):
    """
    Tests setting and getting defaults via the ``set_sys`` and
    ``get_sys`` commands.
    :param self:
    :return:
    """

    self.app.exec_command_test('set_sys alpha 0.1')
    self.assertEqual(self.app.exec_command_test('get_sys alpha'), 0.1)

    doc = self.run_json('test --input %s --method modularity1' % self.write("w.csv", "0,1,2\n1,0,3\n2,3,0\n"))
    self.assertEqual(doc["results"]["tests"][0]["alpha"], 0.1)

    self.app.exec_command_test('set_sys alpha 0.05')

    self.app.exec_command_test('set_sys literal_normal true')
    self.assertIs(self.app.exec_command_test('get_sys literal_normal'), True)
    self.app.exec_command_test('set_sys literal_normal false')

    self.app.exec_command_test('set_sys tw1_table none')
    self.assertIsNone(self.app.exec_command_test('get_sys tw1_table'))


def test_set_sys_checks(self):
    """
    :param self:
    :return:
    """

    self.assertRaises(self.app.CommandError, self.app.exec_command_test, 'set_sys colour red')
    self.assertRaises(self.app.CommandError, self.app.exec_command_test, 'set_sys reps many')
    self.assertRaises(self.app.CommandError, self.app.exec_command_test, 'set_sys literal_normal 3')
    self.assertRaises(self.app.CommandError, self.app.exec_command_test, 'get_sys colour')


def test_list_sys(self):
    """
    :param self:
    :return:
    """

    listed = self.app.exec_command_test('list_sys tw1')
    self.assertIn("tw1_m", listed)
    self.assertNotIn("alpha", listed)
    self.assertIn("alpha", self.app.exec_command_test('list_sys'))
