// The board state is a mirror of the service's session state plus local UI
// concerns (an in-progress selection, an inline error, a hint overlay, the
// fetched distinguishing formula).  All transitions are pure; main.ts owns
// the only mutable reference.

import type { HintResponse, PendingSpoiler, ServerState, Side } from "./types";
import type { Selection } from "./selection";

export interface BoardState {
    server: ServerState | null;
    selection: Selection | null;
    error: string | null;
    hint: HintResponse | null;
    formula: string | null;
    busy: boolean;
}

export const initialState: BoardState = {
    server: null,
    selection: null,
    error: null,
    hint: null,
    formula: null,
    busy: false,
};

export function withServer(state: BoardState, server: ServerState): BoardState {
    return { ...state, server, selection: null, hint: null, error: null, busy: false };
}

export function withError(state: BoardState, error: string): BoardState {
    return { ...state, error, busy: false };
}

export function withSelection(state: BoardState, selection: Selection | null): BoardState {
    return { ...state, selection };
}

export function withHint(state: BoardState, hint: HintResponse): BoardState {
    return { ...state, hint, busy: false };
}

export function withFormula(state: BoardState, formula: string): BoardState {
    return { ...state, formula, busy: false };
}

export function busy(state: BoardState): BoardState {
    return { ...state, busy: true, error: null };
}

// Whose pick is the UI waiting for, and in which structure may the human
// click?  As Spoiler the human may open either word; as Duplicator only the
// structure opposite the engine's pending pick.
export function selectableSides(state: BoardState): Side[] {
    const s = state.server;
    if (!s || s.status !== "InProgress" || state.busy) return [];
    if (s.humanSide === "Spoiler") return s.pendingSpoiler ? [] : ["A", "B"];
    const pending: PendingSpoiler | null = s.pendingSpoiler;
    if (!pending) return [];
    return [pending.structure === "A" ? "B" : "A"];
}

export function roundNumber(state: BoardState): number {
    const s = state.server;
    if (!s) return 0;
    return s.k - s.roundsLeft + 1;
}

// Rows of the pick table: round number, both elements, plus the constant
// rows that are always part of the winning condition.
export interface TableRow {
    label: string;
    a: string;
    b: string;
    kind: "pick" | "constant";
}

export function picksTable(state: BoardState): TableRow[] {
    const s = state.server;
    if (!s) return [];
    const rows: TableRow[] = s.picks.map(([a, b], i) => ({
        label: `round ${i + 1}`,
        a,
        b,
        kind: "pick" as const,
    }));
    const letters = s.alphabet.split("");
    s.constants.A.forEach((ca, i) => {
        const name = i < letters.length ? letters[i] : "eps";
        rows.push({ label: `const ${name}`, a: ca, b: s.constants.B[i], kind: "constant" });
    });
    return rows;
}
