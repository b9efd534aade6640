import { ApiClient } from "./api";
import { ownerOfPixel, renderGraph, renderGrid, statusText } from "./board";
import { GameStore } from "./store";
import type { PlayerColor } from "./types";

export const PRESETS: Record<string, string> = {
    "3x3 example start": "WBW\nBWB\nWBW\n",
    "1x1 white": "W\n",
    "4x4 stripes": "BBBB\nWWWW\nBBBB\nWWWW\n",
    "5x4 checkerboard": "BWBWB\nWBWBW\nBWBWB\nWBWBW\n",
};

let animations = true;

/** Animations are cosmetic; tests switch them off. */
export function setAnimations(enabled: boolean): void {
    animations = enabled;
}

export function mountApp(root: HTMLElement, api: ApiClient): GameStore {
    root.innerHTML = `
      <header>
        <h1>Paintbucket</h1>
        <p class="tagline">fill in an opponent group; whoever moves last wins</p>
      </header>
      <section class="setup">
        <select id="preset"></select>
        <textarea id="grid-text" rows="5" spellcheck="false"></textarea>
        <label>engine:
          <select id="engine">
            <option value="">none (two humans)</option>
            <option value="white" selected>plays White</option>
            <option value="black">plays Black</option>
          </select>
        </label>
        <label>first player:
          <select id="first">
            <option value="black" selected>Black</option>
            <option value="white">White</option>
          </select>
        </label>
        <button id="new-game">new game</button>
        <span id="setup-error" class="error" role="alert"></span>
      </section>
      <section class="play">
        <div id="status" class="status"></div>
        <div id="banner" class="banner" hidden></div>
        <div id="board" class="board"></div>
        <svg id="graph" class="graph" viewBox="0 0 420 320" hidden></svg>
        <div class="controls">
          <button id="hint" disabled>hint</button>
          <span id="hint-badge" class="badge" hidden></span>
          <button id="undo" disabled>undo</button>
          <button id="toggle-view" disabled>graph view</button>
        </div>
        <div id="move-error" class="error" role="alert"></div>
      </section>
    `;

    const el = <T extends HTMLElement>(id: string) =>
        root.querySelector<T>(`#${id}`)!;
    const preset = el<HTMLSelectElement>("preset");
    const gridText = el<HTMLTextAreaElement>("grid-text");
    const engineSelect = el<HTMLSelectElement>("engine");
    const firstSelect = el<HTMLSelectElement>("first");
    const board = el<HTMLDivElement>("board");
    const graph = root.querySelector<SVGElement>("#graph")!;
    const banner = el<HTMLDivElement>("banner");
    const status = el<HTMLDivElement>("status");
    const hintButton = el<HTMLButtonElement>("hint");
    const hintBadge = el<HTMLSpanElement>("hint-badge");
    const undoButton = el<HTMLButtonElement>("undo");
    const toggleButton = el<HTMLButtonElement>("toggle-view");
    const setupError = el<HTMLSpanElement>("setup-error");
    const moveError = el<HTMLDivElement>("move-error");

    for (const name of Object.keys(PRESETS)) {
        const option = document.createElement("option");
        option.value = name;
        option.textContent = name;
        preset.appendChild(option);
    }
    gridText.value = PRESETS["3x3 example start"];
    preset.addEventListener("change", () => {
        gridText.value = PRESETS[preset.value] ?? gridText.value;
    });

    const store = new GameStore(api);
    let graphMode = false;

    const shake = () => {
        if (!animations) {
            return;
        }
        board.classList.add("shake");
        setTimeout(() => board.classList.remove("shake"), 300);
    };

    const handlers = {
        onClickPixel(row: number, col: number) {
            const state = store.snapshot().state;
            if (!state || state.terminal) {
                return; // disabled-state clicks are no-ops
            }
            const target = ownerOfPixel(state, row, col);
            if (target === null) {
                return;
            }
            // the server owns legality; a 409 surfaces its reason verbatim
            void store.clickGroup(target).then((ok) => {
                if (!ok) {
                    shake();
                }
            });
        },
        onHoverPixel(row: number, col: number | null) {
            const state = store.snapshot().state;
            if (!state || col === null) {
                store.hover(null);
                return;
            }
            store.hover(ownerOfPixel(state, row, col));
        },
    };

    store.subscribe((view) => {
        status.textContent = statusText(view);
        renderGrid(board, view, handlers);
        renderGraph(graph, view);
        const state = view.state;
        const playable = !!state && !state.terminal;
        hintButton.disabled = !playable || view.busy;
        undoButton.disabled = !state || state.history.length === 0 || view.busy;
        toggleButton.disabled = !state;
        banner.hidden = !state?.terminal;
        if (state?.terminal && state.winner) {
            banner.textContent = statusText(view);
        }
        if (view.hint) {
            hintBadge.hidden = false;
            hintBadge.textContent = view.hint.winning
                ? `winning move: group ${view.hint.target}`
                : `no winning move — smallest group ${view.hint.target}`;
        } else {
            hintBadge.hidden = true;
            hintBadge.textContent = "";
        }
        moveError.textContent = view.error ?? "";
    });

    el<HTMLButtonElement>("new-game").addEventListener("click", () => {
        setupError.textContent = "";
        const engine = (engineSelect.value || null) as PlayerColor | null;
        void store
            .newGame({
                grid: gridText.value,
                engine,
                first_player: firstSelect.value as PlayerColor,
            })
            .then((ok) => {
                if (!ok) {
                    // surface the server's validation message inline
                    setupError.textContent = store.snapshot().error ?? "rejected";
                }
            });
    });

    hintButton.addEventListener("click", () => void store.hint());
    undoButton.addEventListener("click", () => void store.undo());
    toggleButton.addEventListener("click", () => {
        graphMode = !graphMode;
        board.hidden = graphMode;
        graph.toggleAttribute("hidden", !graphMode);
        toggleButton.textContent = graphMode ? "grid view" : "graph view";
    });

    return store;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
    const base = new URLSearchParams(location.search).get("api") ?? "/api";
    mountApp(document.getElementById("app")!, new ApiClient(base));
}
