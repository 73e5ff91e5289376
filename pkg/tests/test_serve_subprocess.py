"""End-to-end check that `fclab serve` really serves over a socket."""

import json
import socket
import subprocess
import sys
import time
import urllib.request

import pytest


def _free_port() -> int:
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


@pytest.fixture(scope="module")
def live_server():
    port = _free_port()
    proc = subprocess.Popen(
        [sys.executable, "-m", "fclab.cli", "serve", "--port", str(port)],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    base = f"http://127.0.0.1:{port}"
    try:
        deadline = time.time() + 20
        while True:
            try:
                with urllib.request.urlopen(base + "/api/experiments", timeout=1):
                    break
            except OSError:
                if time.time() > deadline:
                    proc.kill()
                    pytest.fail("service did not come up")
                time.sleep(0.2)
        yield base
    finally:
        proc.terminate()
        proc.wait(timeout=10)


def _post(base, path, payload):
    req = urllib.request.Request(
        base + path,
        data=json.dumps(payload).encode(),
        headers={"content-type": "application/json"},
        method="POST",
    )
    with urllib.request.urlopen(req, timeout=30) as res:
        return json.loads(res.read())


def test_serve_answers_equiv(live_server):
    body = _post(live_server, "/api/equiv", {"wordA": "aaaa", "wordB": "aaa", "k": 2})
    assert body["outcome"] == "spoiler_wins"


def test_serve_plays_a_game(live_server):
    created = _post(live_server, "/api/game", {"wordA": "aaaa", "wordB": "aaa", "k": 2, "humanSide": "Spoiler"})
    sid = created["sessionId"]
    moved = _post(live_server, f"/api/game/{sid}/move", {"structure": "A", "element": "aaaa"})
    assert moved["accepted"]
    with urllib.request.urlopen(live_server + f"/api/game/{sid}/hint", timeout=30) as res:
        hint = json.loads(res.read())
    assert hint["evaluation"] == "wins_in"
