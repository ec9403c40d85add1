import io

import pytest

from pennant import (
    CorpusParseError,
    DocRecord,
    DuplicateDocIdError,
    NormalizationPolicy,
    ingest_corpus,
    read_corpus,
)
from pennant.corpus import iter_corpus_records


def test_duplicate_terms_within_doc_collapse():
    corpus = ingest_corpus(
        [DocRecord("d1", frozenset(["A", "B"])), DocRecord("d2", frozenset(["A", "A", "C"]))]
    )
    assert corpus.docs[1].terms == {"A", "C"}


def test_empty_stream_is_valid():
    corpus = ingest_corpus([])
    assert len(corpus) == 0


def test_duplicate_doc_id_rejected():
    records = [DocRecord("d1", frozenset(["A"])), DocRecord("d1", frozenset(["B"]))]
    with pytest.raises(DuplicateDocIdError, match="d1"):
        ingest_corpus(records)


def test_empty_term_set_dropped_after_normalization():
    records = [DocRecord("d1", frozenset(["  ", ""])), DocRecord("d2", frozenset(["A"]))]
    corpus = ingest_corpus(records)
    assert [d.doc_id for d in corpus.docs] == ["d2"]
    assert corpus.n_empty_dropped == 1


def test_trim_is_default_case_preserved():
    corpus = ingest_corpus([DocRecord("d1", frozenset([" Labor Supply ", "Labor Supply"]))])
    assert corpus.docs[0].terms == {"Labor Supply"}


def test_fold_case_opt_in():
    norm = NormalizationPolicy(fold_case=True)
    corpus = ingest_corpus([DocRecord("d1", frozenset(["Youth", "YOUTH"]))], norm=norm)
    assert corpus.docs[0].terms == {"youth"}


def test_tsv_parsing_with_comments_and_blanks(tmp_path):
    path = tmp_path / "corpus.tsv"
    path.write_text("# header comment\nd1\tA|B\n\nd2\tA| C |\n", encoding="utf-8")
    corpus = read_corpus(path)
    assert {d.doc_id: d.terms for d in corpus.docs} == {
        "d1": {"A", "B"},
        "d2": {"A", "C"},
    }


def test_tsv_missing_tab_names_line():
    with pytest.raises(CorpusParseError, match="line 2"):
        list(iter_corpus_records(io.StringIO("d1\tA\nno-tab-here\n")))


def test_tsv_missing_doc_id():
    with pytest.raises(CorpusParseError, match="line 1"):
        list(iter_corpus_records(io.StringIO("\tA|B\n")))


def test_jsonl_parsing_sniffed(tmp_path):
    path = tmp_path / "corpus.jsonl"
    path.write_text(
        '{"id": "d1", "terms": ["A", "B"]}\n{"id": "d2", "terms": ["C"]}\n',
        encoding="utf-8",
    )
    corpus = read_corpus(path)
    assert {d.doc_id: d.terms for d in corpus.docs} == {"d1": {"A", "B"}, "d2": {"C"}}


@pytest.mark.parametrize(
    "line,fragment",
    [
        ('{"terms": ["A"]}', "missing field 'id'"),
        ('{"id": "d1"}', "missing field 'terms'"),
        ('{"id": "", "terms": ["A"]}', "non-empty string"),
        ('{"id": "d1", "terms": "A"}', "array of strings"),
        ("{broken", "invalid JSON"),
        ('["d1", ["A"]]', "not a JSON object"),
    ],
)
def test_jsonl_malformed_records(line, fragment):
    with pytest.raises(CorpusParseError, match="line 1"):
        try:
            list(iter_corpus_records(io.StringIO(line + "\n"), fmt="jsonl"))
        except CorpusParseError as exc:
            assert fragment in str(exc)
            raise


def test_descriptors_with_commas_and_spaces_survive(tmp_path):
    path = tmp_path / "corpus.tsv"
    path.write_text("d1\tAliens, Illegal|Labor Supply\n", encoding="utf-8")
    corpus = read_corpus(path)
    assert corpus.docs[0].terms == {"Aliens, Illegal", "Labor Supply"}
