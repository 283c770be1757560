# -*- coding: utf-8 -*-
"""Package exports following modules below.

* :mod:`~keyphrase_bench.corpus.records` defines record and limit types
* :mod:`~keyphrase_bench.corpus.preprocess` implements cleaning, filtering and
  model normalization of records
* :mod:`~keyphrase_bench.corpus.stats` computes corpus statistics
* :mod:`~keyphrase_bench.corpus.io` reads and writes line-delimited corpora
"""
