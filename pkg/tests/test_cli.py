import io
import json
import unittest
from contextlib import redirect_stderr, redirect_stdout

import main


class TestCommandLine(unittest.TestCase):

    def run_cli(self, *argv):
        """返回 (退出码, stdout, stderr)；argparse 的 SystemExit 转换为退出码"""
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            try:
                code = main.main(list(argv))
            except SystemExit as e:
                code = e.code
        return code, out.getvalue(), err.getvalue()

    def test_bern_json(self):
        code, out, _ = self.run_cli("bern", "--n", "2", "--a", "1", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(out, '{"n":2,"a":1,"method":"doublesum","coeffs":["1/6","-1","1"]}\n')

    def test_bern_plain(self):
        code, out, _ = self.run_cli("bern", "--n", "0", "--a", "3", "--format", "plain")
        self.assertEqual(code, 0)
        self.assertEqual(out, "1\n")

    def test_bern_methods_agree(self):
        outputs = {self.run_cli("bern", "--n", "6", "--a", "2", "--method", m)[1]
                   for m in ("bell", "doublesum", "series")}
        self.assertEqual(len(outputs), 1)

    def test_order_zero(self):
        code, _, err = self.run_cli("bern", "--n", "1", "--a", "0", "--method", "doublesum")
        self.assertEqual(code, 2)
        self.assertIn("a=0 requires --method series", err)

        code, out, _ = self.run_cli("bern", "--n", "1", "--a", "0", "--method", "series")
        self.assertEqual(code, 0)
        self.assertEqual(out, "x\n")

    def test_usage_errors(self):
        self.assertEqual(self.run_cli("bern", "--n", "-1")[0], 2)
        self.assertEqual(self.run_cli("bern", "--n", "2", "--format", "xml")[0], 2)
        self.assertEqual(self.run_cli("bern", "--n", "2", "--method", "newton")[0], 2)
        self.assertEqual(self.run_cli("bell", "--n", "2", "--k", "1", "--at-x", "1/0")[0], 2)
        self.assertEqual(self.run_cli("bell", "--n", "2", "--k", "1", "--a", "0")[0], 2)

    def test_no_command(self):
        code, out, _ = self.run_cli()
        self.assertEqual(code, 2)
        self.assertIn("bern", out)

    def test_table_csv(self):
        code, out, _ = self.run_cli("table", "--max-n", "1", "--a", "1", "--format", "csv")
        self.assertEqual(code, 0)
        self.assertEqual(out, "n,c0,c1\n0,1,0\n1,-1/2,1\n")

    def test_table_single_row(self):
        code, out, _ = self.run_cli("table", "--max-n", "0", "--a", "4", "--format", "csv")
        self.assertEqual(code, 0)
        self.assertEqual(out, "n,c0\n0,1\n")

    def test_table_json(self):
        code, out, _ = self.run_cli("table", "--max-n", "3", "--a", "2", "--method", "bell", "--format", "json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["a"], 2)
        self.assertEqual(data["method"], "bell")
        self.assertEqual([row["n"] for row in data["rows"]], [0, 1, 2, 3])

    def test_bernoulli(self):
        code, out, _ = self.run_cli("bernoulli", "--max-n", "4")
        self.assertEqual(code, 0)
        self.assertEqual(out, "B_0 = 1\nB_1 = -1/2\nB_2 = 1/6\nB_3 = 0\nB_4 = -1/30\n")

        self.assertEqual(self.run_cli("bernoulli", "--max-n", "0")[1], "B_0 = 1\n")

        _, out, _ = self.run_cli("bernoulli", "--max-n", "12", "--format", "json")
        values = json.loads(out)["values"]
        self.assertEqual(values[12], {"n": 12, "value": "-691/2730"})

    def test_bell(self):
        self.assertEqual(self.run_cli("bell", "--n", "2", "--k", "1", "--a", "1", "--at-x", "0")[1], "1/3\n")
        self.assertEqual(self.run_cli("bell", "--n", "0", "--k", "0")[1], "1\n")
        self.assertEqual(self.run_cli("bell", "--n", "2", "--k", "3")[1], "0\n")
        self.assertEqual(self.run_cli("bell", "--n", "2", "--k", "800", "--a", "5")[1], "0\n")
        self.assertEqual(self.run_cli("bell", "--n", "1", "--k", "1")[1], "x + 1/2\n")

    def test_verify(self):
        code, out, _ = self.run_cli("verify", "--max-n", "6", "--max-a", "2", "--enum-cap", "4")
        self.assertEqual(code, 0)
        self.assertTrue(out.endswith("overall: PASS\n"))
        self.assertEqual(out.count("[PASS]"), 10)

    def test_verify_json(self):
        code, out, _ = self.run_cli("verify", "--max-n", "0", "--format", "json")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["overall"])


if __name__ == '__main__':
    unittest.main()
