// Browser entry point: a create-game form plus the rendered board.  State
// lives in the controller; every change re-renders the board container and
// events are delegated from it.  The session id rides in the URL hash so
// games are shareable.

import { ApiClient } from "./api";
import { GameController } from "./controller";
import { renderGame } from "./render";
import type { Side } from "./types";

const api = new ApiClient("");
const board = document.getElementById("board")!;
const form = document.getElementById("new-game") as HTMLFormElement;

const controller = new GameController(api, (state) => {
    board.innerHTML = renderGame(state);
    const sid = state.server?.sessionId;
    if (sid && window.location.hash !== `#${sid}`) {
        window.location.hash = `#${sid}`;
    }
});

form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    const data = new FormData(form);
    void controller.newGame(
        String(data.get("wordA") ?? ""),
        String(data.get("wordB") ?? ""),
        Number(data.get("k") ?? 1),
        data.get("humanSide") === "Duplicator" ? "Duplicator" : "Spoiler",
    );
});

// drag selection over letter cells
let dragging: { side: Side; start: number } | null = null;

function letterAt(ev: Event): { side: Side; idx: number } | null {
    const el = ev.target as HTMLElement;
    if (!el.dataset || el.dataset.idx === undefined || !el.dataset.side) return null;
    return { side: el.dataset.side as Side, idx: Number(el.dataset.idx) };
}

board.addEventListener("mousedown", (ev) => {
    const at = letterAt(ev);
    if (!at) return;
    ev.preventDefault();
    dragging = { side: at.side, start: at.idx };
    controller.select({ side: at.side, start: at.idx, end: at.idx });
});

board.addEventListener("mouseover", (ev) => {
    if (!dragging) return;
    const at = letterAt(ev);
    if (!at || at.side !== dragging.side) return;
    controller.select({ side: dragging.side, start: dragging.start, end: at.idx });
});

document.addEventListener("mouseup", () => {
    dragging = null;
});

board.addEventListener("click", (ev) => {
    const el = (ev.target as HTMLElement).closest("[data-action]") as HTMLElement | null;
    if (!el || el.hasAttribute("disabled")) return;
    const side = (el.dataset.side ?? "A") as Side;
    switch (el.dataset.action) {
        case "pick-eps":
            void controller.submitElement(side, "eps");
            break;
        case "pick-bot":
            void controller.pickBottom(side);
            break;
        case "submit-selection":
            void controller.submitSelection();
            break;
        case "hint":
            void controller.requestHint();
            break;
        case "show-formula":
            void controller.showFormula();
            break;
    }
});

// load a shared session from the hash
const fromHash = window.location.hash.replace(/^#/, "");
if (fromHash) {
    void controller.load(fromHash);
} else {
    board.innerHTML = renderGame(controller.state);
}
