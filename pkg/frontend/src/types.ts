export type PlayerColor = "black" | "white";

export interface VertexDto {
    id: number;
    color: PlayerColor;
}

export interface HistoryEntry {
    player: PlayerColor;
    target: number;
}

export interface GridDto {
    rows: number;
    cols: number;
    pixels: string[];
    initial: string;
}

export interface GameState {
    id: string;
    revision: number;
    vertices: VertexDto[];
    edges: [number, number][];
    to_move: PlayerColor;
    engine: PlayerColor | null;
    terminal: boolean;
    winner: PlayerColor | null;
    legal_moves: number[];
    history: HistoryEntry[];
    grid?: GridDto;
    groups?: Record<string, [number, number][]>;
}

export interface HintResponse {
    revision: number;
    target: number;
    winning: boolean;
}

export interface NewGameRequest {
    grid?: string;
    bipartite?: unknown;
    engine?: PlayerColor | null;
    first_player?: PlayerColor;
}
