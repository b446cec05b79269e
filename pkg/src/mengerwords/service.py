"""HTTP session service for playing the disk game interactively.

Sessions live in memory (optionally snapshotted to disk as JSON); each
session records the played word, and the current state is always the
trace of that word from the base state.  Requests to one session are
serialized; distinct sessions proceed concurrently.
"""

from __future__ import annotations

import json
import threading
import uuid
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import hanoi
from .words import Word, parse_word, format_word
from .hanoi import HanoiState, base_state, leading_disk
from .projection import project_chain

MAX_DISKS = 12


class SessionCreate(BaseModel):
    disks: int = Field(ge=1, le=MAX_DISKS)


class StateOut(BaseModel):
    stage: str
    pegs: list[int]
    faces: str
    hand: int
    all_off: bool


class SessionOut(BaseModel):
    id: str
    disks: int
    state: StateOut
    word: str
    moves: int
    created: str
    updated: str


class MoveOption(BaseModel):
    letter: str
    label: str
    sign: int
    leading_disk: int
    advances: bool
    state: StateOut


class MoveRequest(BaseModel):
    letter: str


class WordOut(BaseModel):
    word: str
    length: int


class ProjectionOut(BaseModel):
    to_disks: int
    word: str


class Session:
    def __init__(self, disks: int) -> None:
        self.id = uuid.uuid4().hex[:12]
        self.disks = disks
        self.history: list = []
        self.state: HanoiState = base_state(disks)
        self.created = _now()
        self.updated = self.created
        self.lock = threading.Lock()

    def word(self) -> Word:
        return Word(tuple(self.history))

    def to_out(self) -> SessionOut:
        return SessionOut(
            id=self.id,
            disks=self.disks,
            state=_state_out(self.state),
            word=format_word(self.word()),
            moves=len(self.history),
            created=self.created,
            updated=self.updated,
        )

    def snapshot(self) -> dict:
        return {
            "id": self.id,
            "disks": self.disks,
            "word": format_word(self.word()),
            "created": self.created,
            "updated": self.updated,
        }

    @classmethod
    def restore(cls, data: dict) -> "Session":
        s = cls(data["disks"])
        s.id = data["id"]
        s.created = data["created"]
        s.updated = data["updated"]
        for a in parse_word(data["word"]).letters:
            s.history.append(a)
            s.state = hanoi.apply_move(s.state, a)
        return s


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _state_out(s: HanoiState) -> StateOut:
    return StateOut(**s.to_json())


def _parse_letter(text: str):
    try:
        w = parse_word(text.strip())
    except ValueError as e:
        raise HTTPException(422, str(e)) from None
    if len(w.letters) != 1 or w.partial:
        raise HTTPException(422, f"expected a single letter, got {text!r}")
    return w.letters[0]


def create_app(snapshot_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="mengerwords game service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()
    snap_path = Path(snapshot_dir) if snapshot_dir else None

    if snap_path and snap_path.is_dir():
        for f in snap_path.glob("session-*.json"):
            s = Session.restore(json.loads(f.read_text()))
            sessions[s.id] = s

    def persist(s: Session) -> None:
        if snap_path:
            snap_path.mkdir(parents=True, exist_ok=True)
            (snap_path / f"session-{s.id}.json").write_text(
                json.dumps(s.snapshot())
            )

    def get_session(sid: str) -> Session:
        with registry_lock:
            s = sessions.get(sid)
        if s is None:
            raise HTTPException(404, f"unknown session {sid}")
        return s

    @app.post("/sessions", response_model=SessionOut)
    def create_session(body: SessionCreate) -> SessionOut:
        s = Session(body.disks)
        with registry_lock:
            sessions[s.id] = s
        persist(s)
        return s.to_out()

    @app.get("/sessions/{sid}", response_model=SessionOut)
    def get(sid: str) -> SessionOut:
        return get_session(sid).to_out()

    @app.get("/sessions/{sid}/moves", response_model=list[MoveOption])
    def moves(sid: str) -> list[MoveOption]:
        s = get_session(sid)
        with s.lock:
            out = []
            for a, nxt in hanoi.legal_moves(s.state):
                stage = s.state.stage
                assembly = stage if a.exp > 0 else stage.shifted(-1)
                lead = leading_disk(assembly)
                out.append(
                    MoveOption(
                        letter=str(a),
                        label=a.base,
                        sign=a.exp,
                        leading_disk=lead,
                        advances=a.exp > 0,
                        state=_state_out(nxt),
                    )
                )
            return out

    @app.post("/sessions/{sid}/moves", response_model=SessionOut)
    def apply(sid: str, body: MoveRequest) -> SessionOut:
        s = get_session(sid)
        a = _parse_letter(body.letter)
        with s.lock:
            s.state = hanoi.apply_move(s.state, a)
            s.history.append(a)
            s.updated = _now()
        persist(s)
        return s.to_out()

    @app.post("/sessions/{sid}/undo", response_model=SessionOut)
    def undo(sid: str) -> SessionOut:
        s = get_session(sid)
        with s.lock:
            if not s.history:
                raise HTTPException(409, "nothing to undo")
            s.history.pop()
            s.state = hanoi.simulate(s.disks, s.word())
            s.updated = _now()
        persist(s)
        return s.to_out()

    @app.get("/sessions/{sid}/word", response_model=WordOut)
    def word(sid: str) -> WordOut:
        s = get_session(sid)
        with s.lock:
            w = s.word()
        return WordOut(word=format_word(w), length=len(w))

    @app.get("/sessions/{sid}/projection", response_model=ProjectionOut)
    def projection(sid: str, to: int) -> ProjectionOut:
        s = get_session(sid)
        if not 2 <= to <= s.disks:
            raise HTTPException(
                422, f"projection target must be within 2..{s.disks} disks"
            )
        with s.lock:
            w = s.word()
        projected = project_chain(w, s.disks - 1, to - 1)
        return ProjectionOut(to_disks=to, word=format_word(projected))

    @app.get("/health")
    def health() -> dict:
        return {"ok": True, "sessions": len(sessions)}

    return app


app = create_app()
