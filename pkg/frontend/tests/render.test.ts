import { describe, expect, it } from "vitest";

import { renderGame } from "../src/render";
import { initialState, withError, withHint, withSelection, withServer } from "../src/state";
import { sampleServer } from "./fixtures";

describe("rendering", () => {
    it("is a pure function of the board state", () => {
        const state = withServer(initialState, sampleServer());
        expect(renderGame(state)).toBe(renderGame({ ...state }));
    });

    it("renders the empty shell without a game", () => {
        expect(renderGame(initialState)).toContain("No game loaded");
    });

    it("renders words as letter cells and the pick table", () => {
        const html = renderGame(withServer(initialState, sampleServer()));
        expect(html).toContain('data-letters="A"');
        expect(html).toContain('data-idx="3"');
        expect(html).toContain("partial isomorphism: holding");
        expect(html).toContain('data-banner="InProgress"');
    });

    it("marks selections and disables foreign-side submission", () => {
        const base = withServer(initialState, sampleServer());
        const html = renderGame(withSelection(base, { side: "A", start: 0, end: 1 }));
        expect(html).toContain("selected");
        expect(html).toContain("pick aa");
    });

    it("shows errors inline", () => {
        const html = renderGame(withError(withServer(initialState, sampleServer()), "422: element is not a factor of word A"));
        expect(html).toContain("data-error");
        expect(html).toContain("422: element is not a factor");
    });

    it("renders hint overlays including CannotWin", () => {
        const base = withServer(initialState, sampleServer({ wordA: "abab", wordB: "abab" }));
        const html = renderGame(withHint(base, { move: null, evaluation: "cannot_win" }));
        expect(html).toContain('data-hint="cannot_win"');
        expect(html).toContain("CannotWin");
    });

    it("renders the verdict banners with the formula button", () => {
        const html = renderGame(
            withServer(initialState, sampleServer({ status: "SpoilerWon", roundsLeft: 0, isomorphic: false })),
        );
        expect(html).toContain('data-banner="SpoilerWon"');
        expect(html).toContain("show-formula");
        expect(html).toContain("partial isomorphism: violated");
    });

    it("stable snapshot for a mid-game board", () => {
        const state = withServer(
            initialState,
            sampleServer({ picks: [["aaaa", "aaa"]], roundsLeft: 1 }),
        );
        expect(renderGame(state)).toMatchSnapshot();
    });
});
