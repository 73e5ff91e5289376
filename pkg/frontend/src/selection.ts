// Substring selection over a rendered word.  A drag over letter cells
// yields an index range; the factor is identified by content, so every
// occurrence of the same substring highlights together.

export interface Selection {
    side: "A" | "B";
    start: number; // inclusive letter index
    end: number; // inclusive letter index
}

export function selectedFactor(word: string, sel: Selection): string {
    const lo = Math.max(0, Math.min(sel.start, sel.end));
    const hi = Math.min(word.length - 1, Math.max(sel.start, sel.end));
    if (word.length === 0 || hi < lo) return "eps";
    return word.slice(lo, hi + 1);
}

// All occurrences of the factor, as letter-index sets, for highlighting.
export function occurrenceIndices(word: string, factor: string): Set<number> {
    const out = new Set<number>();
    if (factor === "eps" || factor === "" || factor === "⊥") return out;
    let from = 0;
    for (;;) {
        const at = word.indexOf(factor, from);
        if (at < 0) break;
        for (let i = at; i < at + factor.length; i++) out.add(i);
        from = at + 1;
    }
    return out;
}

export function isFactorOf(word: string, candidate: string): boolean {
    if (candidate === "eps") return true;
    if (candidate === "⊥") return true; // legal universe element, not a factor
    return candidate.length > 0 && word.includes(candidate);
}
