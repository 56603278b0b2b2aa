"""
Integration tests against the hep-th citation corpus.

Set ``TVGNET_HEPTH_DIR`` to a directory holding ``citations.txt`` (SNAP
citation pairs) and ``metadata.txt`` (id, date and authors per paper).
"""
import os
from pathlib import Path

import pytest

from tvgnet.ingest import build_interaction_network, corpus_stats, filter_by_strength, read_corpus


@pytest.fixture(scope="module")
def hep_th_corpus():
    directory = Path(os.environ["TVGNET_HEPTH_DIR"])
    return read_corpus([directory / "citations.txt", directory / "metadata.txt"], "snap")


class TestHepTh:
    """Published corpus sizes of the hep-th portion of arXiv."""

    def test_corpus_sizes(self, hep_th_corpus):
        stats = corpus_stats(hep_th_corpus)
        assert stats.papers == 29555
        assert stats.authors == 59439
        assert stats.citations_total == 352807

    @pytest.mark.slow
    def test_most_proficient_network(self, hep_th_corpus):
        g = build_interaction_network(hep_th_corpus)
        filtered = filter_by_strength(g, 150, g.lifetime.end - 1)
        assert filtered.number_of_nodes() == 12583
        assert filtered.number_of_edges() == 84512
