"""Local HTTP/JSON game service for live play against the engine.

Sessions are in-memory and capped at 64 vertices so hint and engine
replies stay interactive. Mutations on one session are serialized by a
per-session lock; the solver's transposition table is shared across
sessions. Every response carries a monotonically increasing revision.

Status codes: 400 malformed request, 404 unknown game, 409 illegal or
out-of-turn move, 422 invariant-violating document.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass, field

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .canon import ISO
from .core import (
    BipartitePosition,
    Color,
    GridPosition,
    IllegalMoveError,
    Move,
    apply_move,
    contract,
    grid_to_colored_graph,
    groups,
    is_terminal,
    legal_moves,
    winner_if_terminal,
)
from .formats import FormatError, grid_to_text, parse_bipartite_document, parse_grid
from .solver import SolveOptions, solve

MAX_SESSION_VERTICES = 64


class ServiceError(Exception):
    def __init__(self, status: int, reason: str):
        super().__init__(reason)
        self.status = status
        self.reason = reason


@dataclass
class GameSession:
    id: str
    initial: BipartitePosition
    current: BipartitePosition
    to_move: Color
    engine_side: Color | None
    grid: GridPosition | None
    pixel_owner: dict[int, int] | None
    history: list[tuple[Move, BipartitePosition]] = field(default_factory=list)
    owner_history: list[dict[int, int]] = field(default_factory=list)
    revision: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock)


def _session_from_payload(payload: dict) -> GameSession:
    if not isinstance(payload, dict):
        raise ServiceError(400, "request body must be a JSON object")
    grid_text = payload.get("grid")
    bipartite_doc = payload.get("bipartite")
    if (grid_text is None) == (bipartite_doc is None):
        raise ServiceError(400, "provide exactly one of 'grid' or 'bipartite'")

    grid = None
    pixel_owner = None
    try:
        if grid_text is not None:
            if not isinstance(grid_text, str):
                raise ServiceError(400, "'grid' must be a string")
            grid = parse_grid(grid_text)
            graph = grid_to_colored_graph(grid)
            position = contract(graph)
            pixel_owner = {}
            for comp in groups(graph):
                rep = min(comp)
                for v in comp:
                    pixel_owner[v] = rep
        else:
            position = parse_bipartite_document(bipartite_doc)
    except FormatError as e:
        raise ServiceError(422, str(e)) from None

    if position.vertex_count > MAX_SESSION_VERTICES:
        raise ServiceError(
            422,
            f"board has {position.vertex_count} vertices; sessions are capped at "
            f"{MAX_SESSION_VERTICES}",
        )

    engine = payload.get("engine")
    if engine not in (None, "black", "white"):
        raise ServiceError(400, "'engine' must be 'black', 'white', or null")
    first = payload.get("first_player", "black")
    if first not in ("black", "white"):
        raise ServiceError(400, "'first_player' must be 'black' or 'white'")

    return GameSession(
        id=secrets.token_hex(8),
        initial=position,
        current=position,
        to_move=Color(first),
        engine_side=Color(engine) if engine else None,
        grid=grid,
        pixel_owner=pixel_owner,
    )


def _apply_ply(session: GameSession, move: Move):
    new_position = apply_move(session.current, move)
    merged = session.current.adjacency()[move.target]
    if session.pixel_owner is not None:
        session.owner_history.append(dict(session.pixel_owner))
        for pixel, owner in session.pixel_owner.items():
            if owner in merged:
                session.pixel_owner[pixel] = move.target
    session.history.append((move, session.current))
    session.current = new_position
    session.to_move = move.player.opposite
    session.revision += 1


def _undo_ply(session: GameSession):
    move, prior = session.history.pop()
    session.current = prior
    session.to_move = move.player
    if session.pixel_owner is not None:
        session.pixel_owner = session.owner_history.pop()
    session.revision += 1


def _state(session: GameSession) -> dict:
    p = session.current
    terminal = is_terminal(p)
    data = {
        "id": session.id,
        "revision": session.revision,
        "vertices": (
            [{"id": v, "color": "black"} for v in sorted(p.black)]
            + [{"id": v, "color": "white"} for v in sorted(p.white)]
        ),
        "edges": [list(e) for e in sorted(p.edges)],
        "to_move": session.to_move.value,
        "engine": session.engine_side.value if session.engine_side else None,
        "terminal": terminal,
        "winner": winner_if_terminal(p).value if terminal else None,
        "legal_moves": [m.target for m in legal_moves(p, session.to_move)],
        "history": [
            {"player": m.player.value, "target": m.target} for m, _ in session.history
        ],
    }
    if session.grid is not None:
        rows = []
        for r in range(session.grid.rows):
            row = ""
            for c in range(session.grid.cols):
                owner = session.pixel_owner[session.grid.pixel_id(r, c)]
                row += "B" if p.color_of(owner) is Color.BLACK else "W"
            rows.append(row)
        groups_map: dict[str, list[list[int]]] = {}
        for r in range(session.grid.rows):
            for c in range(session.grid.cols):
                owner = session.pixel_owner[session.grid.pixel_id(r, c)]
                groups_map.setdefault(str(owner), []).append([r, c])
        data["grid"] = {
            "rows": session.grid.rows,
            "cols": session.grid.cols,
            "pixels": rows,
            "initial": grid_to_text(session.grid),
        }
        data["groups"] = groups_map
    return data


def create_app() -> FastAPI:
    app = FastAPI(title="paintbucket service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    sessions: dict[str, GameSession] = {}
    sessions_lock = threading.Lock()
    engine_opts = SolveOptions(memo=ISO, table={})

    @app.exception_handler(ServiceError)
    async def on_service_error(_request: Request, exc: ServiceError):
        return JSONResponse(status_code=exc.status, content={"detail": exc.reason})

    @app.exception_handler(RequestValidationError)
    async def on_malformed(_request: Request, _exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    def get_session(game_id: str) -> GameSession:
        with sessions_lock:
            session = sessions.get(game_id)
        if session is None:
            raise ServiceError(404, f"unknown game {game_id!r}")
        return session

    def engine_reply(session: GameSession):
        if session.engine_side is None or is_terminal(session.current):
            return
        if session.to_move is not session.engine_side:
            return
        result = solve(session.current, session.to_move, engine_opts)
        _apply_ply(session, result.pv[0])

    @app.post("/api/games", status_code=201)
    def create_game(payload: dict = Body(...)):
        session = _session_from_payload(payload)
        with sessions_lock:
            sessions[session.id] = session
        with session.lock:
            engine_reply(session)
            return _state(session)

    @app.get("/api/games/{game_id}")
    def get_game(game_id: str):
        session = get_session(game_id)
        with session.lock:
            return _state(session)

    @app.post("/api/games/{game_id}/moves")
    def post_move(game_id: str, payload: dict = Body(...)):
        session = get_session(game_id)
        target = payload.get("target") if isinstance(payload, dict) else None
        if not isinstance(target, int) or isinstance(target, bool):
            raise ServiceError(400, "'target' must be an integer vertex id")
        with session.lock:
            if is_terminal(session.current):
                raise ServiceError(409, "the game is already over")
            if session.engine_side is not None \
                    and session.to_move is session.engine_side:
                raise ServiceError(409, "it is the engine's turn")
            try:
                move = Move(session.to_move, target)
                _apply_ply(session, move)
            except IllegalMoveError as e:
                raise ServiceError(409, str(e)) from None
            engine_reply(session)
            return _state(session)

    @app.post("/api/games/{game_id}/hint")
    def hint(game_id: str):
        session = get_session(game_id)
        with session.lock:
            if is_terminal(session.current):
                raise ServiceError(409, "the game is over")
            result = solve(session.current, session.to_move, engine_opts)
            return {
                "revision": session.revision,
                "target": result.pv[0].target,
                "winning": result.winner is session.to_move,
            }

    @app.post("/api/games/{game_id}/undo")
    def undo(game_id: str):
        session = get_session(game_id)
        with session.lock:
            plies = 2 if session.engine_side is not None else 1
            if len(session.history) < plies:
                raise ServiceError(409, "nothing to undo")
            for _ in range(plies):
                _undo_ply(session)
            # when the pop lands on the engine's turn (engine moved first and
            # everything else was undone) the deterministic reply restores the
            # post-engine-move state instead of deadlocking the session
            engine_reply(session)
            return _state(session)

    @app.delete("/api/games/{game_id}", status_code=204)
    def delete_game(game_id: str):
        with sessions_lock:
            if game_id not in sessions:
                raise ServiceError(404, f"unknown game {game_id!r}")
            del sessions[game_id]
        return Response(status_code=204)

    return app
