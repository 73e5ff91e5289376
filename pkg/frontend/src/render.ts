// Rendering is a pure function of the board state: BoardState -> HTML.
// main.ts re-renders wholesale after every transition and wires events by
// delegation, so nothing here keeps references into the DOM.

import { occurrenceIndices, selectedFactor } from "./selection";
import { BoardState, picksTable, roundNumber, selectableSides } from "./state";
import { BOT } from "./types";

function esc(s: string): string {
    return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

function renderWord(state: BoardState, side: "A" | "B"): string {
    const s = state.server!;
    const word = side === "A" ? s.wordA : s.wordB;
    const active = selectableSides(state).includes(side);
    const sel = state.selection && state.selection.side === side ? state.selection : null;
    const highlight = sel ? occurrenceIndices(word, selectedFactor(word, sel)) : new Set<number>();
    const hintMove = state.hint?.move && state.hint.move.structure === side ? state.hint.move.element : null;
    const hinted = hintMove ? occurrenceIndices(word, hintMove) : new Set<number>();
    const letters = word
        .split("")
        .map((c, i) => {
            const classes = ["letter"];
            if (highlight.has(i)) classes.push("selected");
            if (hinted.has(i)) classes.push("hinted");
            return `<span class="${classes.join(" ")}" data-side="${side}" data-idx="${i}">${esc(c)}</span>`;
        })
        .join("");
    return `
      <div class="word ${active ? "active" : "inactive"}" data-word-side="${side}">
        <h3>word ${side}: <code>${esc(word) || "eps"}</code></h3>
        <div class="letters" data-letters="${side}">${letters || "<em>(empty word)</em>"}</div>
        <div class="word-actions">
          <button data-action="pick-eps" data-side="${side}" ${active ? "" : "disabled"}>pick eps</button>
          <button data-action="pick-bot" data-side="${side}" ${active ? "" : "disabled"}>pick ${BOT}</button>
          <button data-action="submit-selection" data-side="${side}" ${active && sel ? "" : "disabled"}>
            pick ${sel ? esc(selectedFactor(word, sel)) : "selection"}
          </button>
        </div>
      </div>`;
}

function renderTable(state: BoardState): string {
    const rows = picksTable(state)
        .map(
            (r) =>
                `<tr class="${r.kind}"><td>${esc(r.label)}</td><td>${esc(r.a)}</td><td>${esc(r.b)}</td></tr>`,
        )
        .join("");
    const s = state.server!;
    const verdictClass = s.isomorphic ? "ok" : "broken";
    return `
      <table class="pairs">
        <thead><tr><th></th><th>structure A</th><th>structure B</th></tr></thead>
        <tbody>${rows}</tbody>
      </table>
      <p class="iso ${verdictClass}">partial isomorphism: ${s.isomorphic ? "holding" : "violated"}</p>`;
}

function renderStatus(state: BoardState): string {
    const s = state.server!;
    if (s.status === "SpoilerWon") {
        return `<div class="banner spoiler" data-banner="SpoilerWon">Spoiler won.
          <button data-action="show-formula">show distinguishing formula</button></div>`;
    }
    if (s.status === "DuplicatorWon") {
        return `<div class="banner duplicator" data-banner="DuplicatorWon">Duplicator won: the picks form a partial isomorphism.</div>`;
    }
    const turn =
        s.humanSide === "Spoiler"
            ? `your move: pick a factor (or ${BOT}) in either word`
            : s.pendingSpoiler
              ? `engine picked <code>${esc(s.pendingSpoiler.element)}</code> in ${s.pendingSpoiler.structure}; reply in the other word`
              : "waiting for the engine";
    return `<div class="banner progress" data-banner="InProgress">
        round ${roundNumber(state)} of ${s.k} &middot; ${turn}</div>`;
}

function renderHint(state: BoardState): string {
    if (!state.hint) return "";
    const h = state.hint;
    if (h.evaluation === "cannot_win") {
        return `<div class="hint" data-hint="cannot_win">hint: CannotWin &mdash; no winning line from here.</div>`;
    }
    if (h.evaluation === "wins_in") {
        return `<div class="hint" data-hint="wins_in">hint: pick <code>${esc(h.move!.element)}</code> in ${h.move!.structure} (wins in ${h.rounds}).</div>`;
    }
    return `<div class="hint" data-hint="${esc(h.evaluation)}">hint: reply <code>${esc(h.move?.element ?? "?")}</code> (${esc(h.evaluation)}).</div>`;
}

export function renderGame(state: BoardState): string {
    if (!state.server) {
        return `<p class="empty">No game loaded. Create one above.</p>`;
    }
    const s = state.server;
    return `
      <section class="meta">
        <span>session <code>${esc(s.sessionId)}</code></span>
        <span>you are <strong>${s.humanSide}</strong></span>
        <span>rounds left: ${s.roundsLeft}</span>
        <button data-action="hint" ${s.status === "InProgress" ? "" : "disabled"}>hint</button>
      </section>
      ${renderStatus(state)}
      ${state.error ? `<div class="error" data-error>${esc(state.error)}</div>` : ""}
      ${renderHint(state)}
      <section class="board">${renderWord(state, "A")}${renderWord(state, "B")}</section>
      <section class="table">${renderTable(state)}</section>
      ${state.formula ? `<section class="formula" data-formula><h3>distinguishing formula</h3><pre>${esc(state.formula)}</pre></section>` : ""}
    `;
}
