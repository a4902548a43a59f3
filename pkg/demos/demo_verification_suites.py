"""Running the named verification suites programmatically.

The same eight suites back the command-line ``verify`` subcommand; here
they are driven directly and their reports inspected.
"""

from helirep.suites import DEFAULT_TOLERANCES, run_suite

for name in ("cg", "schur", "gy"):
    report = run_suite(name)
    print(f"suite {name!r}: {len(report['checks'])} checks, "
          f"max residual {report['max_residual']:.2e} "
          f"(tolerance {report['tolerance']:g}) -> "
          f"{'ok' if report['ok'] else 'FAIL'}")
    assert report["ok"]

report = run_suite("schur")
print(f"  schur extras: realized relation signs {report['realized_signs']}")

report = run_suite("gy", tol=1e-15)
worst = max(report["checks"], key=lambda row: row["residual"])
print(f"tightening gy to 1e-15: ok={report['ok']} "
      f"(worst check {worst['name']!r} at {worst['residual']:.2e})")

print("defaults:", {k: f"{v:g}" for k, v in sorted(DEFAULT_TOLERANCES.items())})
print("the full set also runs via the CLI: helirep verify <suite>")
