import { ApiClient, ApiError } from "./api";
import type { GameState, NewGameRequest } from "./types";

export interface BoardView {
    state: GameState | null;
    revision: number;
    /** vertex id of the group under the cursor, if any */
    highlighted: number | null;
    /** engine-recommended group from the last hint, with its badge */
    hint: { target: number; winning: boolean } | null;
    error: string | null;
    busy: boolean;
}

type Listener = (view: BoardView) => void;

/** Client-side session state.
 *
 * The store never mutates game state locally: every repaint comes from a
 * server response, and responses older than the current revision are
 * discarded. At most one mutating request is in flight at a time; hints
 * are read-only and may run concurrently.
 */
export class GameStore {
    private view: BoardView = {
        state: null,
        revision: -1,
        highlighted: null,
        hint: null,
        error: null,
        busy: false,
    };
    private listeners: Listener[] = [];
    private mutating = false;

    constructor(private readonly api: ApiClient) {}

    subscribe(listener: Listener): () => void {
        this.listeners.push(listener);
        listener(this.view);
        return () => {
            this.listeners = this.listeners.filter((l) => l !== listener);
        };
    }

    snapshot(): BoardView {
        return this.view;
    }

    private emit(patch: Partial<BoardView>) {
        this.view = { ...this.view, ...patch };
        for (const listener of this.listeners) {
            listener(this.view);
        }
    }

    /** Adopt a server response; stale revisions are dropped. */
    applyState(state: GameState): boolean {
        if (this.view.state && state.revision < this.view.revision) {
            return false;
        }
        this.emit({
            state,
            revision: state.revision,
            highlighted: null,
            hint: null,
            error: null,
        });
        return true;
    }

    private async mutate(action: () => Promise<GameState>): Promise<boolean> {
        if (this.mutating) {
            return false;
        }
        this.mutating = true;
        this.emit({ busy: true, error: null });
        try {
            const state = await action();
            this.applyState(state);
            return true;
        } catch (err) {
            const detail = err instanceof ApiError ? err.message : String(err);
            this.emit({ error: detail });
            return false;
        } finally {
            this.mutating = false;
            this.emit({ busy: false });
        }
    }

    newGame(spec: NewGameRequest): Promise<boolean> {
        return this.mutate(() => this.api.newGame(spec));
    }

    /** Post the move for the group that owns the clicked pixel/node. */
    clickGroup(target: number): Promise<boolean> {
        const state = this.view.state;
        if (!state || state.terminal) {
            return Promise.resolve(false);
        }
        return this.mutate(() => this.api.postMove(state.id, target));
    }

    undo(): Promise<boolean> {
        const state = this.view.state;
        if (!state) {
            return Promise.resolve(false);
        }
        return this.mutate(() => this.api.undo(state.id));
    }

    /** Read-only; allowed while a mutation is in flight. */
    async hint(): Promise<void> {
        const state = this.view.state;
        if (!state || state.terminal) {
            return;
        }
        try {
            const hint = await this.api.hint(state.id);
            // reconcile by revision: ignore hints computed for older states
            if (hint.revision === this.view.revision) {
                this.emit({ hint: { target: hint.target, winning: hint.winning } });
            }
        } catch (err) {
            const detail = err instanceof ApiError ? err.message : String(err);
            this.emit({ error: detail });
        }
    }

    hover(target: number | null) {
        if (this.view.highlighted !== target) {
            this.emit({ highlighted: target });
        }
    }

    clearError() {
        if (this.view.error !== null) {
            this.emit({ error: null });
        }
    }
}
