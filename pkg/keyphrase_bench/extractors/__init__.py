# -*- coding: utf-8 -*-
"""Package exports following modules below.

* :mod:`~keyphrase_bench.extractors.config` defines the tunable extractor
  parameters
* :mod:`~keyphrase_bench.extractors.candidates` extracts candidate phrases
* :mod:`~keyphrase_bench.extractors.extractor_abstract` implements generic
  extractor base class
* :mod:`~keyphrase_bench.extractors.extractor_yake` implements statistical
  feature extractor class
* :mod:`~keyphrase_bench.extractors.extractor_topicrank` implements topic graph
  extractor class
* :mod:`~keyphrase_bench.extractors.registry` maps method names to extractors
* :mod:`~keyphrase_bench.extractors.tuning` tunes parameters on a validation set
"""
