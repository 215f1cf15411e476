import pytest

from hexpack import annulus, parallel


def test_worker_count_from_environment(monkeypatch):
    monkeypatch.setenv("HEXPACK_THREADS", "3")
    assert parallel.worker_count() == 3
    monkeypatch.delenv("HEXPACK_THREADS")
    assert parallel.worker_count() >= 1


@pytest.mark.parametrize("raw", ["0", "-2", "many"])
def test_worker_count_rejects_bad_values(monkeypatch, raw):
    monkeypatch.setenv("HEXPACK_THREADS", raw)
    with pytest.raises(ValueError):
        parallel.worker_count()


def test_pmap_keeps_order(monkeypatch):
    monkeypatch.setenv("HEXPACK_THREADS", "1")
    assert parallel.pmap(abs, [-3, 2, -1]) == [3, 2, 1]


def test_search_independent_of_worker_count(monkeypatch):
    monkeypatch.setenv("HEXPACK_THREADS", "1")
    one = annulus.search_lemma_L_2d(trials=400, seed=5, chunks=4).to_json()
    monkeypatch.setenv("HEXPACK_THREADS", "2")
    two = annulus.search_lemma_L_2d(trials=400, seed=5, chunks=4).to_json()
    assert one == two
