// Orchestration between the API client and the board state.  The browser
// entry point and the test suite both drive the game exclusively through
// this controller, so a scripted playthrough exercises the same code the
// UI runs.  Every displayed verdict comes from the service's responses.

import { ApiClient, ApiError } from "./api";
import { selectedFactor, type Selection } from "./selection";
import {
    BoardState,
    busy,
    initialState,
    selectableSides,
    withError,
    withFormula,
    withHint,
    withSelection,
    withServer,
} from "./state";
import type { HumanSide, Side } from "./types";
import { BOT } from "./types";

export class GameController {
    state: BoardState = initialState;
    private hintAbort: AbortController | null = null;

    constructor(
        private api: ApiClient,
        private onChange: (state: BoardState) => void = () => {},
    ) {}

    private set(state: BoardState) {
        this.state = state;
        this.onChange(state);
    }

    private fail(e: unknown) {
        const message = e instanceof ApiError ? `${e.status}: ${e.message}` : String(e);
        this.set(withError(this.state, message));
    }

    async newGame(wordA: string, wordB: string, k: number, humanSide: HumanSide): Promise<void> {
        this.set(busy(this.state));
        try {
            const res = await this.api.newGame(wordA, wordB, k, humanSide);
            this.set({ ...withServer(initialState, res.state), formula: null });
        } catch (e) {
            this.fail(e);
        }
    }

    async load(sessionId: string): Promise<void> {
        this.set(busy(this.state));
        try {
            this.set(withServer(this.state, await this.api.state(sessionId)));
        } catch (e) {
            this.fail(e);
        }
    }

    select(selection: Selection | null): void {
        this.set(withSelection(this.state, selection));
    }

    /** Submit the current drag selection as the move in its structure. */
    async submitSelection(): Promise<void> {
        const sel = this.state.selection;
        const server = this.state.server;
        if (!sel || !server) return;
        const word = sel.side === "A" ? server.wordA : server.wordB;
        await this.submitElement(sel.side, selectedFactor(word, sel));
    }

    /** Submit an explicit element: a factor string, "eps", or the null token. */
    async submitElement(side: Side, element: string): Promise<void> {
        const server = this.state.server;
        if (!server) return;
        if (!selectableSides(this.state).includes(side)) {
            this.set(withError(this.state, `not your turn to pick in ${side}`));
            return;
        }
        this.set(busy(this.state));
        try {
            const res = await this.api.move(server.sessionId, side, element);
            this.set(withServer(this.state, res.state));
        } catch (e) {
            this.fail(e);
        }
    }

    async pickBottom(side: Side): Promise<void> {
        await this.submitElement(side, BOT);
    }

    async requestHint(): Promise<void> {
        const server = this.state.server;
        if (!server) return;
        this.hintAbort?.abort();
        this.hintAbort = new AbortController();
        this.set(busy(this.state));
        try {
            const hint = await this.api.hint(server.sessionId, this.hintAbort.signal);
            this.set(withHint(this.state, hint));
        } catch (e) {
            if (e instanceof DOMException && e.name === "AbortError") return;
            this.fail(e);
        }
    }

    /** After a Spoiler win, fetch the distinguishing sentence via /api/equiv. */
    async showFormula(): Promise<void> {
        const server = this.state.server;
        if (!server) return;
        this.set(busy(this.state));
        try {
            const verdict = await this.api.equiv(server.wordA, server.wordB, server.k, true);
            this.set(
                withFormula(
                    this.state,
                    verdict.outcome === "spoiler_wins" && verdict.formula
                        ? verdict.formula
                        : "(the words are equivalent at this round count)",
                ),
            );
        } catch (e) {
            this.fail(e);
        }
    }
}
