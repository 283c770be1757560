# -*- coding: utf-8 -*-
"""Package exports following modules below.

* :mod:`~keyphrase_bench.metrics.matching` computes full-match and partial-match
  F1@k of keyphrase lists
* :mod:`~keyphrase_bench.metrics.rouge` computes ROUGE-1 and ROUGE-L F1 of token
  sequences
* :mod:`~keyphrase_bench.metrics.report` aggregates per-document scores into
  reports and formats them
"""
