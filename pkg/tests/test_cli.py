from __future__ import annotations

import json

import pytest

from mtwer.cli import main
from mtwer.formats import serialize_seglst, serialize_stm

from sample_session import two_stream_hyp, two_stream_ref


@pytest.fixture
def session_files(tmp_path):
    ref = tmp_path / "ref.json"
    hyp = tmp_path / "hyp.json"
    ref.write_text(serialize_seglst({"demo": two_stream_ref()}))
    hyp.write_text(serialize_seglst({"demo": two_stream_hyp()}))
    return ref, hyp


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMetricCommands:
    def test_cpwer_golden(self, session_files, capsys):
        ref, hyp = session_files
        code, out, _ = run(capsys, ["cpwer", "--ref", str(ref), "--hyp", str(hyp)])
        assert code == 0
        report = json.loads(out)
        assert report["error_rate"] == pytest.approx(0.875)
        assert (report["insertions"], report["deletions"], report["substitutions"]) == (2, 3, 2)
        assert report["length"] == 8
        assert report["assignment"]["type"] == "speaker_mapping"

    def test_word_level_orcwer_golden(self, session_files, capsys):
        ref, hyp = session_files
        code, out, _ = run(
            capsys, ["orcwer", "--word-level", "--ref", str(ref), "--hyp", str(hyp)]
        )
        assert code == 0
        assert json.loads(out)["error_rate"] == pytest.approx(0.25)

    def test_all_metrics_run(self, session_files, capsys):
        ref, hyp = session_files
        expected = {
            "wer": None,  # single-stream concatenation, value not pinned here
            "cpwer": 0.875,
            "tcpwer": None,
            "dawer": None,
            "orcwer": 0.5,
            "tcorcwer": None,
            "mimower": 0.375,
            "tcmimower": None,
            "dicpwer": 0.25,
            "ditcpwer": None,
            "greedy-dicpwer": 0.25,
            "greedy-orcwer": 0.5,
        }
        for metric, value in expected.items():
            code, out, err = run(capsys, [metric, "--ref", str(ref), "--hyp", str(hyp)])
            assert code == 0, (metric, err)
            report = json.loads(out)
            if value is not None:
                assert report["error_rate"] == pytest.approx(value), metric

    def test_stm_reference_against_json_hypothesis(self, tmp_path, capsys):
        ref = tmp_path / "ref.stm"
        ref.write_text(serialize_stm({"demo": two_stream_ref()}))
        hyp = tmp_path / "hyp.json"
        hyp.write_text(serialize_seglst({"demo": two_stream_hyp()}))
        code, out, _ = run(capsys, ["cpwer", "--ref", str(ref), "--hyp", str(hyp)])
        assert code == 0
        assert json.loads(out)["error_rate"] == pytest.approx(0.875)

    def test_out_file_and_per_session(self, session_files, tmp_path, capsys):
        ref, hyp = session_files
        out_path = tmp_path / "report.json"
        code, out, _ = run(
            capsys,
            [
                "cpwer", "--ref", str(ref), "--hyp", str(hyp),
                "--out", str(out_path), "--per-session",
            ],
        )
        assert code == 0
        report = json.loads(out_path.read_text())
        assert report["sessions"]["demo"]["errors"] == 7
        assert "demo" in out  # the per-session table


class TestErrorHandling:
    def test_missing_times_is_a_data_error(self, tmp_path, capsys):
        ref = tmp_path / "ref.json"
        hyp = tmp_path / "hyp.json"
        ref.write_text(serialize_seglst({"demo": two_stream_ref()}))
        hyp.write_text(
            json.dumps([{"session_id": "demo", "speaker": "s1", "words": "A B"}])
        )
        code, _, err = run(
            capsys, ["tcorcwer", "--ref", str(ref), "--hyp", str(hyp), "--collar", "5"]
        )
        assert code == 1
        assert "time" in err.lower()

    def test_malformed_file_names_position(self, tmp_path, capsys):
        ref = tmp_path / "ref.json"
        hyp = tmp_path / "hyp.json"
        ref.write_text('[{"session_id": "s", "speaker": "a"}]')
        hyp.write_text("[]")
        code, _, err = run(capsys, ["cpwer", "--ref", str(ref), "--hyp", str(hyp)])
        assert code == 1
        assert "record 0" in err

    def test_usage_error_exit_code(self, session_files, capsys):
        ref, hyp = session_files
        assert run(capsys, ["cpwer", "--ref", str(ref)])[0] == 2
        assert run(capsys, ["not-a-metric"])[0] == 2

    def test_unknown_extension_needs_format_flag(self, tmp_path, session_files, capsys):
        ref, hyp = session_files
        odd = tmp_path / "ref.transcript"
        odd.write_text(ref.read_text())
        code, _, err = run(capsys, ["cpwer", "--ref", str(odd), "--hyp", str(hyp)])
        assert code == 2
        code, out, _ = run(
            capsys,
            ["cpwer", "--ref", str(odd), "--ref-format", "json", "--hyp", str(hyp)],
        )
        assert code == 0

    def test_collar_on_unconstrained_metric_is_usage_error(self, session_files, capsys):
        ref, hyp = session_files
        code, _, _ = run(
            capsys,
            ["align", "--metric", "cpwer", "--collar", "3", "--ref", str(ref), "--hyp", str(hyp)],
        )
        assert code == 2


class TestAlign:
    def test_emits_html_with_embedded_documents(self, session_files, tmp_path, capsys):
        ref, hyp = session_files
        out_path = tmp_path / "view.html"
        code, out, _ = run(
            capsys,
            ["align", "--ref", str(ref), "--hyp", str(hyp), "--out", str(out_path)],
        )
        assert code == 0
        text = out_path.read_text()
        start = text.index('type="application/json">') + len('type="application/json">')
        end = text.index("</script>", start)
        documents = json.loads(text[start:end].replace("<\\/", "</"))
        assert len(documents) == 1
        assert documents[0]["session_id"] == "demo"
        assert len(documents[0]["ref_words"]) == 8
        assert len(documents[0]["hyp_words"]) == 7
