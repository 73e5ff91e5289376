"""The HTTP service, scripted: the same flow the browser explorer drives.

Spawns the server as a subprocess, plays the classic two-round game on
(aaaa, aaa) as Spoiler following one hint, trips the illegal-element and
out-of-turn errors on purpose, and runs an experiment over the wire.
"""

import json
import socket
import subprocess
import sys
import time
import urllib.error
import urllib.request

with socket.socket() as s:
    s.bind(("127.0.0.1", 0))
    PORT = s.getsockname()[1]
BASE = f"http://127.0.0.1:{PORT}"


def post(path, payload):
    req = urllib.request.Request(
        BASE + path, data=json.dumps(payload).encode(),
        headers={"content-type": "application/json"}, method="POST",
    )
    with urllib.request.urlopen(req) as res:
        return json.loads(res.read())


def get(path):
    with urllib.request.urlopen(BASE + path) as res:
        return json.loads(res.read())


server = subprocess.Popen(
    [sys.executable, "-m", "fclab.cli", "serve", "--port", str(PORT)],
    stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL,
)
try:
    for _ in range(100):
        try:
            get("/api/experiments")
            break
        except OSError:
            time.sleep(0.2)

    # one-shot verdicts
    verdict = post("/api/equiv", {"wordA": "aaaa", "wordB": "aaa", "k": 2, "wantFormula": True})
    print("verdict:", verdict["outcome"], "in", verdict["rounds_needed"], "round(s)")
    print("sentence:", verdict["formula"][:100], "...")

    # an interactive session as Spoiler
    created = post("/api/game", {"wordA": "aaaa", "wordB": "aaa", "k": 2, "humanSide": "Spoiler"})
    sid = created["sessionId"]
    print("\nsession:", sid)

    moved = post(f"/api/game/{sid}/move", {"structure": "A", "element": "aaaa"})
    print("picked aaaa in A; engine replies:", moved["engineReply"])

    hint = get(f"/api/game/{sid}/hint")
    print("hint:", hint)
    moved = post(f"/api/game/{sid}/move", hint["move"])
    print("followed the hint; status:", moved["status"])

    # the picks table the UI renders
    state = get(f"/api/game/{sid}")
    print("picks:", state["picks"], "| isomorphic:", state["isomorphic"])

    # error surfaces: illegal element and a finished session
    for payload, expect in [({"structure": "B", "element": "aaaa"}, 409)]:
        try:
            post(f"/api/game/{sid}/move", payload)
        except urllib.error.HTTPError as e:
            print(f"move into finished game -> {e.code}")

    fresh = post("/api/game", {"wordA": "aaaa", "wordB": "aaa", "k": 2, "humanSide": "Spoiler"})
    try:
        post(f"/api/game/{fresh['sessionId']}/move", {"structure": "B", "element": "aaaa"})
    except urllib.error.HTTPError as e:
        print(f"illegal factor pick -> {e.code}:", json.loads(e.read())["error"])

    # experiments over the wire
    report = post("/api/experiments/witnesses_anbn/run", {"k": 1, "bound": 8})
    print("\nexperiment witnesses_anbn:", report["status"], report["witnesses"][:1])
finally:
    server.terminate()
    server.wait(timeout=10)
