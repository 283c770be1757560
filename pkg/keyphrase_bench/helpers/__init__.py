# -*- coding: utf-8 -*-
"""Package contains following modules shared by the rest of the library.

* :mod:`keyphrase_bench.helpers.tokenizer` splits text into tokens and loads
  bundled word lists
* :mod:`keyphrase_bench.helpers.codec` converts keyphrase strings to lists and
  canonical stemmed forms
* :mod:`keyphrase_bench.helpers.pool` maps work over documents in parallel while
  preserving input order
"""
