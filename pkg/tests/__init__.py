# -*- coding: utf-8 -*-
"""Package exports test cases for `keyphrase_bench` library.

* :mod:`~tests.test_helpers_tokenizer` tests for
:mod:`~keyphrase_bench.helpers.tokenizer`

* :mod:`~tests.test_helpers_codec` tests for
:mod:`~keyphrase_bench.helpers.codec`

* :mod:`~tests.test_helpers_pool` tests for
:class:`~keyphrase_bench.helpers.pool.WorkerPool`

* :mod:`~tests.test_corpus_preprocess` tests for
:mod:`~keyphrase_bench.corpus.preprocess` and
:mod:`~keyphrase_bench.corpus.records`

* :mod:`~tests.test_corpus_stats` tests for
:mod:`~keyphrase_bench.corpus.stats` and :mod:`~keyphrase_bench.corpus.io`

* :mod:`~tests.test_extractors_candidates` tests for
:mod:`~keyphrase_bench.extractors.candidates` and
:class:`~keyphrase_bench.extractors.config.ExtractorConfig`

* :mod:`~tests.test_extractors_yake` tests for
:class:`~keyphrase_bench.extractors.extractor_yake.ExtractorYake`

* :mod:`~tests.test_extractors_topicrank` tests for
:class:`~keyphrase_bench.extractors.extractor_topicrank.ExtractorTopicRank`

* :mod:`~tests.test_extractors_fuzz` tests for properties shared by all
extractors

* :mod:`~tests.test_extractors_tuning` tests for
:mod:`~keyphrase_bench.extractors.tuning`

* :mod:`~tests.test_metrics_matching` tests for
:mod:`~keyphrase_bench.metrics.matching`

* :mod:`~tests.test_metrics_rouge` tests for
:mod:`~keyphrase_bench.metrics.rouge`

* :mod:`~tests.test_metrics_report` tests for
:mod:`~keyphrase_bench.metrics.report`

* :mod:`~tests.test_harness_cli` tests for
:mod:`~keyphrase_bench.harness.cli` and
:mod:`~keyphrase_bench.harness.manifest`
"""
