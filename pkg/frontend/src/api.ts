import type { GameState, HintResponse, NewGameRequest } from "./types";

export class ApiError extends Error {
    constructor(readonly status: number, detail: string) {
        super(detail);
    }
}

type FetchLike = typeof fetch;

/** Thin typed wrapper over the game service; the server is the single
 *  source of truth, so every method resolves to a full server response. */
export class ApiClient {
    constructor(
        private readonly base: string = "/api",
        private readonly fetchFn: FetchLike = (...args) => fetch(...args),
    ) {}

    private async request<T>(path: string, init?: RequestInit): Promise<T> {
        const response = await this.fetchFn(`${this.base}${path}`, {
            headers: { "content-type": "application/json" },
            ...init,
        });
        if (response.status === 204) {
            return undefined as T;
        }
        const body = await response.json().catch(() => ({}));
        if (!response.ok) {
            const detail =
                typeof body?.detail === "string" ? body.detail : response.statusText;
            throw new ApiError(response.status, detail);
        }
        return body as T;
    }

    newGame(spec: NewGameRequest): Promise<GameState> {
        return this.request("/games", { method: "POST", body: JSON.stringify(spec) });
    }

    getState(id: string): Promise<GameState> {
        return this.request(`/games/${id}`);
    }

    postMove(id: string, target: number): Promise<GameState> {
        return this.request(`/games/${id}/moves`, {
            method: "POST",
            body: JSON.stringify({ target }),
        });
    }

    hint(id: string): Promise<HintResponse> {
        return this.request(`/games/${id}/hint`, { method: "POST" });
    }

    undo(id: string): Promise<GameState> {
        return this.request(`/games/${id}/undo`, { method: "POST" });
    }

    deleteGame(id: string): Promise<void> {
        return this.request(`/games/${id}`, { method: "DELETE" });
    }
}
