"""Run the theorem survey over a pair of rings and print the report.

Every supported statement is checked against every ideal (and pair of
ideals) of the chosen subrings; hypothesis gates keep statements inside
their stated scope. The same survey is reachable from the command line:

    lrings verify --rings Z4,Z6 --lattices chain2,chain3
"""

from lrings.verify import SuiteParams, render_text, run_suite

params = SuiteParams(rings=("Z4", "Z6"), lattices=("chain2", "chain3"))
result = run_suite(params)
print(render_text(result))

print("exploratory mode on the same carriers plus the diamond lattice M3,")
print("gates off, radical-is-ideal check only:")
wild = SuiteParams(rings=("Z4",), lattices=("m3",), gate=False)
for report in run_suite(wild, ids=["T2.14"]).reports:
    print(f"  {report.theorem}: checked={report.checked} "
          f"passed={report.passed} failed={report.failed}")
    for label, detail in report.failures[:3]:
        print(f"    {label}: {detail}")
