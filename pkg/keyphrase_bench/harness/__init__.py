# -*- coding: utf-8 -*-
"""Package exports following modules below.

* :mod:`~keyphrase_bench.harness.manifest` records how an output was produced
* :mod:`~keyphrase_bench.harness.cli` implements the ``kpbench`` command
"""
