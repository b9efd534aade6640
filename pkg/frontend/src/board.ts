import type { BoardView } from "./store";
import type { GameState } from "./types";

export interface BoardHandlers {
    onClickPixel(row: number, col: number): void;
    onHoverPixel(row: number, col: number | null): void;
}

/** Server-side group (contracted vertex) that owns a pixel. */
export function ownerOfPixel(state: GameState, row: number, col: number): number | null {
    if (!state.groups) {
        return null;
    }
    for (const [vid, cells] of Object.entries(state.groups)) {
        if (cells.some(([r, c]) => r === row && c === col)) {
            return Number(vid);
        }
    }
    return null;
}

export function statusText(view: BoardView): string {
    const state = view.state;
    if (!state) {
        return "no game";
    }
    if (state.terminal && state.winner) {
        const name = state.winner === "black" ? "Black" : "White";
        return state.history.length > 0
            ? `${name} wins — made the last move`
            : `${name} wins — the board started monochromatic`;
    }
    const turn = state.to_move === "black" ? "Black" : "White";
    const engine = state.engine === state.to_move ? " (engine)" : "";
    return `${turn} to move${engine}`;
}

export function renderGrid(
    container: HTMLElement,
    view: BoardView,
    handlers: BoardHandlers,
): void {
    const state = view.state;
    container.textContent = "";
    if (!state?.grid) {
        return;
    }
    const { rows, cols, pixels } = state.grid;
    container.style.setProperty("--cols", String(cols));
    const highlightCells = new Set<string>();
    const hintCells = new Set<string>();
    if (state.groups) {
        for (const [vid, cells] of Object.entries(state.groups)) {
            const id = Number(vid);
            for (const [r, c] of cells) {
                if (id === view.highlighted) {
                    highlightCells.add(`${r},${c}`);
                }
                if (id === view.hint?.target) {
                    hintCells.add(`${r},${c}`);
                }
            }
        }
    }
    for (let r = 0; r < rows; r++) {
        for (let c = 0; c < cols; c++) {
            const cell = document.createElement("button");
            cell.className = `cell ${pixels[r][c] === "B" ? "black" : "white"}`;
            cell.dataset.row = String(r);
            cell.dataset.col = String(c);
            if (highlightCells.has(`${r},${c}`)) {
                cell.classList.add("highlight");
            }
            if (hintCells.has(`${r},${c}`)) {
                cell.classList.add("hint");
            }
            cell.addEventListener("click", () => handlers.onClickPixel(r, c));
            cell.addEventListener("mouseenter", () => handlers.onHoverPixel(r, c));
            cell.addEventListener("mouseleave", () => handlers.onHoverPixel(r, null));
            container.appendChild(cell);
        }
    }
}

interface LayoutNode {
    id: number;
    color: "black" | "white";
    x: number;
    y: number;
}

/** Deterministic spring relaxation: two color columns, then a few
 *  rounds of attraction along edges and repulsion between nodes. */
export function layoutGraph(state: GameState, width = 420, height = 320): LayoutNode[] {
    const nodes: LayoutNode[] = state.vertices.map((v, i) => {
        const sameColor = state.vertices.filter((u) => u.color === v.color);
        const rank = sameColor.findIndex((u) => u.id === v.id);
        return {
            id: v.id,
            color: v.color,
            x: v.color === "black" ? width * 0.25 : width * 0.75,
            y: ((rank + 1) / (sameColor.length + 1)) * height + (i % 2) * 8,
        };
    });
    const byId = new Map(nodes.map((n) => [n.id, n]));
    for (let round = 0; round < 60; round++) {
        for (const [b, w] of state.edges) {
            const from = byId.get(b)!;
            const to = byId.get(w)!;
            const dx = to.x - from.x;
            const dy = to.y - from.y;
            const dist = Math.max(Math.hypot(dx, dy), 1);
            const pull = (dist - 120) * 0.01;
            from.x += (dx / dist) * pull;
            from.y += (dy / dist) * pull;
            to.x -= (dx / dist) * pull;
            to.y -= (dy / dist) * pull;
        }
        for (const a of nodes) {
            for (const b of nodes) {
                if (a.id >= b.id) continue;
                const dx = b.x - a.x;
                const dy = b.y - a.y;
                const dist = Math.max(Math.hypot(dx, dy), 1);
                if (dist < 70) {
                    const push = (70 - dist) * 0.05;
                    a.x -= (dx / dist) * push;
                    a.y -= (dy / dist) * push;
                    b.x += (dx / dist) * push;
                    b.y += (dy / dist) * push;
                }
            }
            a.x = Math.min(Math.max(a.x, 20), width - 20);
            a.y = Math.min(Math.max(a.y, 20), height - 20);
        }
    }
    return nodes;
}

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderGraph(svg: SVGElement, view: BoardView): void {
    const state = view.state;
    svg.textContent = "";
    if (!state) {
        return;
    }
    const nodes = layoutGraph(state);
    const byId = new Map(nodes.map((n) => [n.id, n]));
    for (const [b, w] of state.edges) {
        const line = document.createElementNS(SVG_NS, "line");
        const from = byId.get(b)!;
        const to = byId.get(w)!;
        line.setAttribute("x1", String(from.x));
        line.setAttribute("y1", String(from.y));
        line.setAttribute("x2", String(to.x));
        line.setAttribute("y2", String(to.y));
        line.setAttribute("class", "edge");
        svg.appendChild(line);
    }
    for (const node of nodes) {
        const circle = document.createElementNS(SVG_NS, "circle");
        circle.setAttribute("cx", String(node.x));
        circle.setAttribute("cy", String(node.y));
        circle.setAttribute("r", "12");
        circle.setAttribute(
            "class",
            `node ${node.color}`
            + (node.id === view.highlighted ? " highlight" : "")
            + (node.id === view.hint?.target ? " hint" : ""),
        );
        svg.appendChild(circle);
        const label = document.createElementNS(SVG_NS, "text");
        label.setAttribute("x", String(node.x));
        label.setAttribute("y", String(node.y + 4));
        label.setAttribute("class", "node-label");
        label.textContent = String(node.id);
        svg.appendChild(label);
    }
}
