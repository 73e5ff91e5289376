import type { ServerState } from "../src/types";

export function sampleServer(overrides: Partial<ServerState> = {}): ServerState {
    return {
        sessionId: "abc123",
        wordA: "aaaa",
        wordB: "aaa",
        alphabet: "a",
        k: 2,
        humanSide: "Spoiler",
        roundsLeft: 2,
        picks: [],
        pendingSpoiler: null,
        history: [],
        status: "InProgress",
        constants: { A: ["a", "eps"], B: ["a", "eps"] },
        universeA: ["eps", "a", "aa", "aaa", "aaaa", "⊥"],
        universeB: ["eps", "a", "aa", "aaa", "⊥"],
        isomorphic: true,
        ...overrides,
    };
}
