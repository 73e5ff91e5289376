"""Local HTTP/JSON service: model checking, game solving, interactive play.

Sessions live in memory; with a persistence path configured they are also
written as one JSON file each (write-temp-then-rename) and reloaded on
demand after a restart.  A corrupt session file is quarantined, never
crashing the server.  Budget exhaustion surfaces as 503 with the explored
count, never as a verdict.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .evaluate import enumerate_models, language_member
from .formulas import free_variables
from .games import (
    BOT,
    BOT_TOKEN,
    BudgetExceededError,
    GamePosition,
    GameSolver,
    duplicator_respond,
    find_violation,
    solve,
    spoiler_hint,
)
from .harness import experiment_ids, run_experiment
from .parsing import FormulaSyntaxError, parse_formula_any

DEFAULT_PORT = 8765
DEFAULT_BUDGET = 50_000_000
MIN_BUDGET = 10_000
ASSIGNMENT_CAP = 100

IN_PROGRESS, SPOILER_WON, DUPLICATOR_WON = "InProgress", "SpoilerWon", "DuplicatorWon"


@dataclass
class Config:
    port: int = DEFAULT_PORT
    node_budget: int = DEFAULT_BUDGET
    default_alphabet: str = ""
    persistence_path: Optional[str] = None
    cors_origin: Optional[str] = None

    def __post_init__(self):
        if not (0 < self.port < 65536):
            raise ValueError(f"port {self.port} out of range")
        if self.node_budget < MIN_BUDGET:
            raise ValueError(f"node budget must be at least {MIN_BUDGET}")

    @staticmethod
    def from_env(**overrides) -> "Config":
        cfg = {}
        if os.environ.get("FC_LAB_PORT"):
            cfg["port"] = int(os.environ["FC_LAB_PORT"])
        if os.environ.get("FC_LAB_BUDGET"):
            cfg["node_budget"] = int(os.environ["FC_LAB_BUDGET"])
        if os.environ.get("FC_LAB_DATA"):
            cfg["persistence_path"] = os.environ["FC_LAB_DATA"]
        cfg.update({k: v for k, v in overrides.items() if v is not None})
        return Config(**cfg)


def canonical_json(payload: dict) -> str:
    """One serialization shared by CLI and API so outputs match bytewise."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _elem_out(x) -> str:
    if x is BOT:
        return BOT_TOKEN
    return x if x != "" else "eps"


def _elem_in(token: str):
    if token == BOT_TOKEN or token == "bot":
        return BOT
    if token == "eps":
        return ""
    return token


@dataclass
class Session:
    id: str
    word_a: str
    word_b: str
    k: int
    human_side: str  # "Spoiler" | "Duplicator"
    solver: GameSolver
    picks: list = field(default_factory=list)
    pending_spoiler: Optional[dict] = None  # {"structure": "A"/"B", "element": ...}
    history: list = field(default_factory=list)
    status: str = IN_PROGRESS
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def rounds_left(self) -> int:
        return self.k - len(self.picks)

    def position(self) -> GamePosition:
        return GamePosition(self.solver, list(self.picks), self.rounds_left())

    def state(self) -> dict:
        return {
            "sessionId": self.id,
            "wordA": self.word_a,
            "wordB": self.word_b,
            "alphabet": "".join(self.solver.alphabet),
            "k": self.k,
            "humanSide": self.human_side,
            "roundsLeft": self.rounds_left(),
            "picks": [[_elem_out(a), _elem_out(b)] for a, b in self.picks],
            "pendingSpoiler": self.pending_spoiler,
            "history": self.history,
            "status": self.status,
            "constants": {
                "A": [_elem_out(c) for c in self.solver.consts_a],
                "B": [_elem_out(c) for c in self.solver.consts_b],
            },
            "universeA": ["eps" if f == "" else f for f in self.solver.sa.facs] + [BOT_TOKEN],
            "universeB": ["eps" if f == "" else f for f in self.solver.sb.facs] + [BOT_TOKEN],
            "isomorphic": not self.violated(),
        }

    def violated(self) -> bool:
        return find_violation(self.solver.sa, self.solver.sb, self.picks) is not None

    def settle(self):
        """Update the status after a completed round; monotone."""
        if self.status != IN_PROGRESS:
            return
        if self.violated():
            self.status = SPOILER_WON
        elif self.rounds_left() == 0:
            self.status = DUPLICATOR_WON

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "wordA": self.word_a,
            "wordB": self.word_b,
            "alphabet": "".join(self.solver.alphabet),
            "k": self.k,
            "humanSide": self.human_side,
            "picks": [[_elem_out(a), _elem_out(b)] for a, b in self.picks],
            "pendingSpoiler": self.pending_spoiler,
            "history": self.history,
            "status": self.status,
        }

    @staticmethod
    def from_json(obj: dict, budget: int) -> "Session":
        solver = GameSolver(obj["wordA"], obj["wordB"], alphabet=obj.get("alphabet"), budget=budget)
        s = Session(
            id=obj["id"],
            word_a=obj["wordA"],
            word_b=obj["wordB"],
            k=obj["k"],
            human_side=obj["humanSide"],
            solver=solver,
            picks=[( _elem_in(a), _elem_in(b)) for a, b in obj["picks"]],
            pending_spoiler=obj.get("pendingSpoiler"),
            history=obj.get("history", []),
            status=obj.get("status", IN_PROGRESS),
        )
        return s


class SessionStore:
    def __init__(self, config: Config):
        self.config = config
        self.sessions: dict[str, Session] = {}
        self.lock = threading.Lock()

    def _path(self, session_id: str) -> Optional[str]:
        if not self.config.persistence_path:
            return None
        return os.path.join(self.config.persistence_path, "sessions", f"{session_id}.json")

    def persist(self, session: Session):
        path = self._path(session.id)
        if path is None:
            return
        os.makedirs(os.path.dirname(path), exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as f:
            json.dump(session.to_json(), f)
        os.replace(tmp, path)

    def get(self, session_id: str) -> Optional[Session]:
        with self.lock:
            s = self.sessions.get(session_id)
        if s is not None:
            return s
        path = self._path(session_id)
        if path is None or not os.path.exists(path):
            return None
        try:
            with open(path, encoding="utf-8") as f:
                obj = json.load(f)
            s = Session.from_json(obj, self.config.node_budget)
        except (ValueError, KeyError, OSError):
            quarantine = path + ".corrupt"
            try:
                os.replace(path, quarantine)
            except OSError:
                pass
            raise CorruptSessionError(session_id)
        with self.lock:
            self.sessions[session_id] = s
        return s

    def put(self, session: Session):
        with self.lock:
            self.sessions[session.id] = session
        self.persist(session)


class CorruptSessionError(RuntimeError):
    def __init__(self, session_id: str):
        super().__init__(f"session file for {session_id} is corrupt; quarantined")
        self.session_id = session_id


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=status)


def _engine_spoiler_move(session: Session):
    """Optimal move when the engine plays the picking side."""
    pos = session.position()
    move, evaluation = spoiler_hint(pos)
    if move is None:
        moves = session.solver._moves(pos.pick_set())
        if not moves:
            return None
        side, elem = moves[0]
        move = ("A" if side == 0 else "B", elem)
    return {"structure": move[0], "element": _elem_out(move[1])}


def create_app(config: Config | None = None) -> FastAPI:
    config = config or Config.from_env()
    app = FastAPI(title="fclab", version="0.1.0")
    store = SessionStore(config)
    app.state.config = config
    app.state.store = store

    if config.cors_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[config.cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    def _session_or_error(session_id: str):
        try:
            s = store.get(session_id)
        except CorruptSessionError as e:
            return None, _error(404, str(e))
        if s is None:
            return None, _error(404, f"unknown session {session_id}")
        return s, None

    @app.post("/api/equiv")
    async def api_equiv(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "malformed JSON body")
        try:
            wa, wb = body["wordA"], body["wordB"]
            k = int(body["k"])
        except (KeyError, TypeError, ValueError):
            return _error(400, "need wordA, wordB, k")
        want_formula = bool(body.get("wantFormula", False))
        try:
            verdict = solve(wa, wb, k, want_formula=want_formula, budget=config.node_budget)
        except BudgetExceededError as e:
            return _error(503, f"budget exceeded after {e.explored} positions")
        except ValueError as e:
            return _error(400, str(e))
        return Response(content=canonical_json(verdict.to_json()), media_type="application/json")

    @app.post("/api/check")
    async def api_check(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "malformed JSON body")
        if "formula" not in body or "word" not in body:
            return _error(400, "need formula and word")
        try:
            phi = parse_formula_any(body["formula"])
        except (FormulaSyntaxError, ValueError) as e:
            return _error(400, f"bad formula: {e}")
        word = body["word"]
        alphabet = body.get("alphabet")
        try:
            if free_variables(phi):
                assignments = enumerate_models(phi, word, alphabet=alphabet, limit=ASSIGNMENT_CAP)
                payload = {
                    "holds": bool(assignments),
                    "assignments": [
                        {x: (v if v != "" else "eps") for x, v in m.items()} for m in assignments
                    ],
                    "capped": len(assignments) >= ASSIGNMENT_CAP,
                }
            else:
                payload = {"holds": language_member(phi, word, alphabet=alphabet), "assignments": [], "capped": False}
        except ValueError as e:
            return _error(400, str(e))
        return Response(content=canonical_json(payload), media_type="application/json")

    @app.post("/api/game")
    async def api_new_game(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "malformed JSON body")
        try:
            wa, wb, k = body["wordA"], body["wordB"], int(body["k"])
        except (KeyError, TypeError, ValueError):
            return _error(400, "need wordA, wordB, k")
        human = body.get("humanSide", "Spoiler")
        if human not in ("Spoiler", "Duplicator"):
            return _error(400, "humanSide must be Spoiler or Duplicator")
        if k < 0:
            return _error(400, "k must be nonnegative")
        alphabet = body.get("alphabet") or (config.default_alphabet or None)
        try:
            solver = GameSolver(wa, wb, alphabet=alphabet, budget=config.node_budget)
        except ValueError as e:
            return _error(400, str(e))
        session = Session(
            id=uuid.uuid4().hex[:12],
            word_a=wa,
            word_b=wb,
            k=k,
            human_side=human,
            solver=solver,
        )
        if k == 0:
            session.settle()
        if session.status == IN_PROGRESS and human == "Duplicator":
            try:
                session.pending_spoiler = _engine_spoiler_move(session)
            except BudgetExceededError as e:
                return _error(503, f"budget exceeded after {e.explored} positions")
            if session.pending_spoiler:
                session.history.append({"mover": "engine", "role": "Spoiler", **session.pending_spoiler})
        store.put(session)
        return JSONResponse({"sessionId": session.id, "state": session.state()})

    @app.get("/api/game/{session_id}")
    def api_game_state(session_id: str):
        session, err = _session_or_error(session_id)
        if err:
            return err
        return JSONResponse(session.state())

    @app.post("/api/game/{session_id}/move")
    async def api_move(session_id: str, request: Request):
        session, err = _session_or_error(session_id)
        if err:
            return err
        try:
            body = await request.json()
        except Exception:
            return _error(400, "malformed JSON body")
        structure = body.get("structure")
        if structure not in ("A", "B"):
            return _error(400, "structure must be A or B")
        if "element" not in body:
            return _error(400, "need element")
        element = _elem_in(str(body["element"]))
        with session.lock:
            if session.status != IN_PROGRESS:
                return _error(409, f"session is over: {session.status}")
            g = session.solver
            try:
                if session.human_side == "Spoiler":
                    if session.pending_spoiler is not None:
                        return _error(409, "engine move pending; not your turn")
                    side_facs = g.sa.fac_set if structure == "A" else g.sb.fac_set
                    if element is not BOT and element not in side_facs:
                        return _error(422, f"element is not a factor of word {structure}")
                    pos = session.position()
                    reply, surviving = duplicator_respond(pos, structure, element)
                    pair = (element, reply) if structure == "A" else (reply, element)
                    session.picks.append(pair)
                    session.history.append(
                        {"mover": "human", "role": "Spoiler", "structure": structure, "element": _elem_out(element)}
                    )
                    session.history.append(
                        {
                            "mover": "engine",
                            "role": "Duplicator",
                            "structure": "B" if structure == "A" else "A",
                            "element": _elem_out(reply),
                        }
                    )
                    engine_reply = _elem_out(reply)
                else:
                    pending = session.pending_spoiler
                    if pending is None:
                        return _error(409, "no engine move to answer")
                    if structure == pending["structure"]:
                        return _error(409, "reply must be in the other structure")
                    side_facs = g.sa.fac_set if structure == "A" else g.sb.fac_set
                    if element is not BOT and element not in side_facs:
                        return _error(422, f"element is not a factor of word {structure}")
                    spoiler_elem = _elem_in(pending["element"])
                    pair = (
                        (spoiler_elem, element) if pending["structure"] == "A" else (element, spoiler_elem)
                    )
                    session.picks.append(pair)
                    session.pending_spoiler = None
                    session.history.append(
                        {"mover": "human", "role": "Duplicator", "structure": structure, "element": _elem_out(element)}
                    )
                    engine_reply = None
                session.settle()
                if (
                    session.status == IN_PROGRESS
                    and session.human_side == "Duplicator"
                    and session.rounds_left() > 0
                ):
                    session.pending_spoiler = _engine_spoiler_move(session)
                    if session.pending_spoiler:
                        session.history.append(
                            {"mover": "engine", "role": "Spoiler", **session.pending_spoiler}
                        )
            except BudgetExceededError as e:
                return _error(503, f"budget exceeded after {e.explored} positions")
            store.put(session)
            return JSONResponse(
                {
                    "accepted": True,
                    "engineReply": engine_reply,
                    "state": session.state(),
                    "status": session.status,
                }
            )

    @app.get("/api/game/{session_id}/hint")
    def api_hint(session_id: str):
        session, err = _session_or_error(session_id)
        if err:
            return err
        with session.lock:
            if session.status != IN_PROGRESS:
                return _error(409, f"session is over: {session.status}")
            try:
                if session.human_side == "Spoiler":
                    move, evaluation = spoiler_hint(session.position())
                    payload = {
                        "move": None
                        if move is None
                        else {"structure": move[0], "element": _elem_out(move[1])},
                        **evaluation.to_json(),
                    }
                else:
                    pending = session.pending_spoiler
                    if pending is None:
                        return _error(409, "no engine move to answer")
                    reply, surviving = duplicator_respond(
                        session.position(), pending["structure"], _elem_in(pending["element"])
                    )
                    payload = {
                        "move": {
                            "structure": "B" if pending["structure"] == "A" else "A",
                            "element": _elem_out(reply),
                        },
                        "evaluation": "winning_reply" if surviving else "all_replies_lose",
                    }
            except BudgetExceededError as e:
                return _error(503, f"budget exceeded after {e.explored} positions")
            return JSONResponse(payload)

    @app.get("/api/experiments")
    def api_experiments():
        return JSONResponse({"experiments": experiment_ids()})

    @app.post("/api/experiments/{experiment_id}/run")
    async def api_run_experiment(experiment_id: str, request: Request):
        if experiment_id not in experiment_ids():
            return _error(404, f"unknown experiment {experiment_id}")
        try:
            raw = await request.body()
            params = json.loads(raw) if raw else {}
        except Exception:
            return _error(400, "malformed JSON body")
        if not isinstance(params, dict):
            return _error(400, "params must be an object")
        try:
            report = run_experiment(experiment_id, **params)
        except BudgetExceededError as e:
            return _error(503, f"budget exceeded after {e.explored} positions")
        except (TypeError, ValueError) as e:
            return _error(400, str(e))
        payload = report.to_json()
        if config.persistence_path:
            path = os.path.join(config.persistence_path, "reports", f"{experiment_id}.json")
            os.makedirs(os.path.dirname(path), exist_ok=True)
            tmp = path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as f:
                json.dump(payload, f)
            os.replace(tmp, path)
        return JSONResponse(payload)

    return app


def serve(config: Config | None = None):
    import uvicorn

    config = config or Config.from_env()
    uvicorn.run(create_app(config), host="127.0.0.1", port=config.port, log_level="warning")
