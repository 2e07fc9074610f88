import io
import json

from lip.cli import run_cli


def _run(argv, stdin="", env=None):
    out = io.StringIO()
    code = run_cli(argv, env=env or {}, out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_process():
    code, out = _run(["process", "My phone number is 9321673878"])
    assert code == 0
    assert out == "my phone number is nine three two one six seven three eight seven eight\n"


def test_process_empty():
    assert _run(["process", ""]) == (0, "\n")


def test_process_stdin():
    assert _run(["process"], stdin="plz msg\n") == (0, "please message\n")


def test_flags_and_env():
    assert _run(["process", "--no-show-phonenumber", "9321673878"])[1] == "a ten digit number\n"
    assert _run(["process", "9321673878"], env={"LIP_SHOW_PHONENUMBER": "false"})[1] == "a ten digit number\n"
    code, out = _run(["process", "--show-phonenumber", "9321673878"], env={"LIP_SHOW_PHONENUMBER": "false"})
    assert out.startswith("nine three")
    assert _run(["process", "--allow-punctuation-spamming", "!@#"])[1] == "exclamation mark at symbol hash symbol\n"


def test_config_file(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"rm_common_abbr": False}))
    assert _run(["process", "--config", str(path), "plz"])[1] == "plz\n"
    path.write_text(json.dumps({"rm_common_abbr": "no"}))
    assert _run(["process", "--config", str(path), "plz"])[0] == 2


def test_batch():
    lines = [
        json.dumps({"id": "a", "text": "Yesss!!!! It's holiday today 🥳🥳🥳"}),
        "{not json",
        json.dumps({"id": "c"}),
        "",
        json.dumps({"id": 5, "text": "hi 😂🤣"}),
    ]
    code, out = _run(["batch"], stdin="\n".join(lines) + "\n")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == len(lines)
    assert rows[0] == {"id": "a", "tts_text": "yes its holiday today with partying face emoji", "have_char": True, "emoji_count": 1}
    assert "error" in rows[1] and "error" in rows[2] and "error" in rows[3]
    assert rows[4]["id"] == 5 and rows[4]["emoji_count"] == 2


def test_batch_unreadable_input(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_bytes(b"\xff\xfe\xfa")
    assert _run(["batch", "--input", str(path)])[0] == 2
    assert _run(["batch", "--input", str(tmp_path / "missing.jsonl")])[0] == 2


def test_goldens():
    code, out = _run(["goldens"])
    assert code == 0
    assert out.count("PASS") == 11
    assert "11/11 passed" in out


def test_goldens_failure_exit_code(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps([{"id": "bad", "input": "hello", "expected": "goodbye"}]))
    code, out = _run(["goldens", "--fixtures", str(path)])
    assert code == 1 and "FAIL bad" in out and "0/1 passed" in out


def test_goldens_missing_fixtures(tmp_path):
    assert _run(["goldens", "--fixtures", str(tmp_path / "none.json")])[0] == 2


def test_bench(tmp_path):
    corpus = tmp_path / "c.txt"
    corpus.write_text("hello there 😂\nplz msg me\n")
    code, out = _run(["bench", "--corpus", str(corpus), "--iters", "5", "--warmup", "1"])
    assert code == 0
    (report,) = json.loads(out)
    assert report["message_length_bucket"] == "<=50"
    assert report["below_minimum"] is True
    assert report["p50_us"] <= report["p90_us"] <= report["p99_us"]


def test_bench_empty_corpus(tmp_path):
    corpus = tmp_path / "c.txt"
    corpus.write_text("\n\n")
    assert _run(["bench", "--corpus", str(corpus)])[0] == 2


def test_assets():
    code, out = _run(["assets"])
    assert code == 0
    assert "wordlist.txt" in out and "profanity.txt" in out
    assert "within budget" in out


def test_usage_errors():
    assert _run([])[0] == 2
    assert _run(["frobnicate"])[0] == 2
    assert _run(["bench", "--iters", "many"])[0] == 2
    assert _run(["process", "x"], env={"LIP_BOGUS": "1"})[0] == 2
