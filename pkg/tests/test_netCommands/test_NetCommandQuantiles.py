import numpy as np


def test_quantiles(self):
    """
    Quantiles and cdf values of the reference laws.
    :param self:
    :return:
    """

    doc = self.run_json('quantiles --law normal --probs 0.95 --at 0')
    self.assertAlmostEqual(doc["results"]["quantiles"][0][1], 1.6448536269514722 * np.sqrt(2) * (1 - 2 / np.pi),
                           places=10)
    self.assertAlmostEqual(doc["results"]["cdf"][0][1], 0.5)

    doc = self.run_json('quantiles --law gumbel --probs 0.95')
    self.assertAlmostEqual(doc["results"]["quantiles"][0][1], 2.7162, places=3)

    doc = self.run_json('quantiles --law tw1 --probs 0.5')
    self.assertEqual(doc["results"]["law"]["m"], 10000)

    doc = self.run_json('quantiles --law f --n 30 --probs 0.05,0.95')
    values = [q[1] for q in doc["results"]["quantiles"]]
    self.assertLess(values[0], values[1])


def test_quantiles_checks(self):
    """
    :param self:
    :return:
    """

    self.assertRaises(self.app.CommandError, self.app.exec_command_test, 'quantiles --law f')
    self.assertRaises(self.app.CommandError, self.app.exec_command_test, 'quantiles --law student')
    self.assertRaises(self.app.CommandError, self.app.exec_command_test, 'quantiles --probs 0.5')
