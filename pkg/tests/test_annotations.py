import pytest

from speech_clarity.annotations import (KEYWORD_TABLE, ErrorClass,
                                        TherapistAnnotation, load_overrides,
                                        map_annotations, map_label,
                                        parse_label_file, serialize_label_file)
from speech_clarity.errors import MalformedLabelLine, NegativeDuration, UnmappedLabel


def test_parse_basic(tmp_path):
    p = tmp_path / "labels.txt"
    p.write_text("12.350\t13.800\tword replacement find → found\n")
    (ann,) = parse_label_file(p)
    assert ann.start_s == pytest.approx(12.35)
    assert ann.end_s == pytest.approx(13.80)
    assert ann.raw_label == "word replacement find → found"


def test_parse_zero_length_region(tmp_path):
    p = tmp_path / "labels.txt"
    p.write_text("0.0\t0.0\tprolonged pause\n")
    (ann,) = parse_label_file(p)
    assert ann.start_s == ann.end_s == 0.0


def test_parse_non_numeric_field(tmp_path):
    p = tmp_path / "labels.txt"
    p.write_text("1.0\tabc\tx\n")
    with pytest.raises(MalformedLabelLine) as exc:
        parse_label_file(p)
    assert exc.value.line_no == 1


def test_parse_too_few_fields(tmp_path):
    p = tmp_path / "labels.txt"
    p.write_text("1.0 2.0 spaces not tabs\n")
    with pytest.raises(MalformedLabelLine):
        parse_label_file(p)


def test_parse_negative_duration(tmp_path):
    p = tmp_path / "labels.txt"
    p.write_text("2.0\t1.0\tbackwards\n")
    with pytest.raises(NegativeDuration):
        parse_label_file(p)


def test_parse_sorted_by_start(tmp_path):
    p = tmp_path / "labels.txt"
    p.write_text("5.0\t6.0\tsecond\n1.0\t2.0\tfirst\n")
    anns = parse_label_file(p)
    assert [a.raw_label for a in anns] == ["first", "second"]


def test_roundtrip(tmp_path, fixtures):
    anns = parse_label_file(fixtures / "sp3.labels.txt")
    out = tmp_path / "out.txt"
    serialize_label_file(anns, out)
    original = (fixtures / "sp3.labels.txt").read_text()
    assert out.read_text() == original


def test_map_label_word_replacement():
    cls, exact = map_label("word replacement find → found")
    assert cls is ErrorClass.WORD_SUBSTITUTION
    assert exact == "find → found"


def test_map_label_prosodic_no_remainder():
    assert map_label("prolonged pause") == (ErrorClass.PROSODIC, "")


def test_map_label_unmapped():
    with pytest.raises(UnmappedLabel):
        map_label("gibberish xyz")


def test_map_label_longest_prefix():
    # "word insertion" must win over any shorter phrase.
    cls, exact = map_label("word insertion the")
    assert cls is ErrorClass.WORD_INSERTION
    assert exact == "the"


def test_keyword_table_total():
    for phrase, expected in KEYWORD_TABLE:
        cls, exact = map_label(phrase)
        assert cls is expected
        assert exact == ""


def test_overrides(tmp_path):
    csv_path = tmp_path / "overrides.csv"
    csv_path.write_text("raw_label,error_class\nodd phrasing here,Repetition\n")
    overrides = load_overrides(csv_path)
    anns = [TherapistAnnotation(0.0, 1.0, "odd phrasing here")]
    (mapped,) = map_annotations(anns, overrides)
    assert mapped.error_class is ErrorClass.REPETITION


def test_map_annotations_unmapped_propagates():
    anns = [TherapistAnnotation(0.0, 1.0, "gibberish xyz")]
    with pytest.raises(UnmappedLabel):
        map_annotations(anns)
