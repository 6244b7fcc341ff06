import unittest
import warnings
from lerchlib.util.errors import UnmatchedPairWarning
from lerchlib.symmetry.classification import SymmetryReport
from lerchlib.symmetry.classification import ZeroClass
from lerchlib.symmetry.classification import classify_zeros
from lerchlib.zeros.zerorecord import ZeroRecord

def record(beta, gamma_t):
    return ZeroRecord(beta, gamma_t, 0, 0.01)


class ClassificationTest(unittest.TestCase):

    def test_pairs_and_unmatched(self):
        zeros = [record("0.5", 10), record("0.37", "202.77"), record("0.9", 50), record("0.63", "202.77")]
        with self.assertWarns(UnmatchedPairWarning):
            classifications, report = classify_zeros(zeros, lambda_="3/4", t_max=300)

        self.assertEqual([c.zero_class for c in classifications],
                         [ZeroClass.OnLine, ZeroClass.OffLine, ZeroClass.OffLine, ZeroClass.OffLine])

        self.assertEqual(classifications[1].partner_index, 3)
        self.assertEqual(classifications[3].partner_index, 1)
        self.assertAlmostEqual(classifications[1].pair_residual, 0)
        self.assertIsNone(classifications[2].partner_index)
        self.assertEqual((report.n1, report.n2, report.unmatched), (4, 3, [2]))
        self.assertEqual(report.t_max, 300)

    def test_tolerances(self):
        zeros = [record("0.5000000001", 10), record("0.4", 20), record("0.6001", 20)]
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            classifications, report = classify_zeros(zeros, online_tol=1e-9, pair_tol=1e-3)

        self.assertEqual(classifications[0].zero_class, ZeroClass.OnLine)
        self.assertEqual(report.n2, 2)

        with self.assertWarns(UnmatchedPairWarning):
            _, report = classify_zeros(zeros, online_tol=1e-9, pair_tol=1e-5)

        self.assertEqual(report.unmatched, [1, 2])

    def test_empty(self):
        classifications, report = classify_zeros([], lambda_="1/2")
        self.assertEqual(classifications, [])
        self.assertEqual(report.row(), "1/2, 0, 0, 0.00")


class SymmetryReportTest(unittest.TestCase):

    def test_rows(self):
        self.assertEqual(SymmetryReport("4/5", 159, 22).row(), "4/5, 159, 22, 13.84")
        self.assertEqual(SymmetryReport("1/2", 203, 0).row(), "1/2, 203, 0, 0.00")
        self.assertEqual(SymmetryReport("5/9", 193, 28).to_dict(), {"lambda": "5/9", "N1": 193, "N2": 28, "pct": 14.51})
