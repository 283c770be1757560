# -*- coding: utf-8 -*-
"""Top-level package of the :mod:`keyphrase_bench` library with following sub-packages.

* :mod:`keyphrase_bench.helpers` tokenizes text and converts keyphrase strings
* :mod:`keyphrase_bench.corpus` cleans, filters and describes corpora
* :mod:`keyphrase_bench.extractors` extracts keyphrases without supervision
* :mod:`keyphrase_bench.metrics` scores keyphrase predictions
* :mod:`keyphrase_bench.harness` ties the pipeline together on the command line
"""
__author__ = "KeyphraseBench contributors"
__version__ = "0.1.0"
