// Thin typed client over the service's JSON API.  Every verdict and game
// state shown in the UI comes from here; nothing is recomputed locally.

import type { HintResponse, HumanSide, MoveResponse, ServerState, Side, Verdict } from "./types";

export class ApiError extends Error {
    constructor(
        public status: number,
        message: string,
    ) {
        super(message);
    }
}

async function unwrap<T>(res: Response): Promise<T> {
    if (!res.ok) {
        let message = `${res.status}`;
        try {
            const body = await res.json();
            if (body && typeof body.error === "string") message = body.error;
        } catch {
            // keep the bare status text
        }
        throw new ApiError(res.status, message);
    }
    return (await res.json()) as T;
}

export class ApiClient {
    constructor(public baseUrl: string = "") {}

    private url(path: string): string {
        return this.baseUrl + path;
    }

    async newGame(wordA: string, wordB: string, k: number, humanSide: HumanSide): Promise<{ sessionId: string; state: ServerState }> {
        const res = await fetch(this.url("/api/game"), {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({ wordA, wordB, k, humanSide }),
        });
        return unwrap(res);
    }

    async state(sessionId: string): Promise<ServerState> {
        return unwrap(await fetch(this.url(`/api/game/${sessionId}`)));
    }

    async move(sessionId: string, structure: Side, element: string): Promise<MoveResponse> {
        const res = await fetch(this.url(`/api/game/${sessionId}/move`), {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({ structure, element }),
        });
        return unwrap(res);
    }

    async hint(sessionId: string, signal?: AbortSignal): Promise<HintResponse> {
        return unwrap(await fetch(this.url(`/api/game/${sessionId}/hint`), { signal }));
    }

    async equiv(wordA: string, wordB: string, k: number, wantFormula: boolean): Promise<Verdict> {
        const res = await fetch(this.url("/api/equiv"), {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({ wordA, wordB, k, wantFormula }),
        });
        return unwrap(res);
    }
}
