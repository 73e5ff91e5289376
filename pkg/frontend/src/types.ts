// Wire types mirroring the service's JSON payloads.

export type Side = "A" | "B";
export type HumanSide = "Spoiler" | "Duplicator";
export type Status = "InProgress" | "SpoilerWon" | "DuplicatorWon";

export const BOT = "⊥";

export interface PendingSpoiler {
    structure: Side;
    element: string;
}

export interface ServerState {
    sessionId: string;
    wordA: string;
    wordB: string;
    alphabet: string;
    k: number;
    humanSide: HumanSide;
    roundsLeft: number;
    picks: [string, string][];
    pendingSpoiler: PendingSpoiler | null;
    history: HistoryEntry[];
    status: Status;
    constants: { A: string[]; B: string[] };
    universeA: string[];
    universeB: string[];
    isomorphic: boolean;
}

export interface HistoryEntry {
    mover: "human" | "engine";
    role: "Spoiler" | "Duplicator";
    structure: Side;
    element: string;
}

export interface MoveResponse {
    accepted: boolean;
    engineReply: string | null;
    state: ServerState;
    status: Status;
}

export interface HintResponse {
    move: { structure: Side; element: string } | null;
    evaluation: string;
    rounds?: number;
}

export interface Verdict {
    outcome: "equivalent" | "spoiler_wins";
    k: number;
    rounds_needed?: number;
    formula?: string | null;
}
