"""Toolkit for estimating human post-editing time of GEC output.

Subpackages cover the full pipeline: corpus parsing and filtering
(:mod:`peet.corpus_io`), token alignment (:mod:`peet.align`), edit
classification (:mod:`peet.classify`), feature extraction
(:mod:`peet.features`), regression models (:mod:`peet.model`), GEC quality
metrics (:mod:`peet.gec_metrics`), system ranking (:mod:`peet.ranking`), the
timed-annotation HTTP service (:mod:`peet.service`) and the command-line
front end (:mod:`peet.cli`).
"""

__version__ = "0.1.0"
