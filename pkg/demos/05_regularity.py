"""
Detecting regular rings from one number
========================================

For an unmixed ring, e(m) = 1 forces regularity. We run the regularity
detector over a few rings, including R2, where the hypothesis is not met.
"""

from closurelab.corpus import build_corpus
from closurelab import check_regular

for entry in build_corpus():
    report = check_regular(entry.ring, None, entry.assert_equidim)
    print(f"{entry.name:16} e={report.quantities['e']}  {report.conclusion}")
