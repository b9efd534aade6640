import { describe, expect, it } from "vitest";
import { ApiClient } from "/root/pkg/frontend/src/api";
import { GameStore } from "/root/pkg/frontend/src/store";

const api = new ApiClient("http://127.0.0.1:8632/api");

describe("live server", () => {
    it("plays the example game through the real service", async () => {
        const store = new GameStore(api);
        await store.newGame({ grid: "WBW\nBWB\nWBW\n", engine: null });
        expect(store.snapshot().state?.legal_moves).toEqual([0, 2, 4, 6, 8]);
        for (const target of [2, 7, 7, 7]) {
            expect(await store.clickGroup(target)).toBe(true);
        }
        const final = store.snapshot().state!;
        expect(final.terminal).toBe(true);
        expect(final.winner).toBe("white");
        expect(final.grid?.pixels).toEqual(["WWW", "WWW", "WWW"]);
    });

    it("hint + engine reply + undo against the real engine", async () => {
        const store = new GameStore(api);
        await store.newGame({ grid: "WBW\nBWB\nWBW\n", engine: "white" });
        await store.hint();
        expect(store.snapshot().hint).toEqual({ target: 0, winning: false });
        await store.clickGroup(0);
        expect(store.snapshot().state?.history.length).toBe(2);
        await store.undo();
        expect(store.snapshot().state?.history.length).toBe(0);
        expect(store.snapshot().revision).toBe(4);
    });

    it("surfaces 409 verbatim from the real service", async () => {
        const store = new GameStore(api);
        await store.newGame({ grid: "WBW\nBWB\nWBW\n" });
        expect(await store.clickGroup(1)).toBe(false);
        expect(store.snapshot().error).toContain("not a white vertex");
    });
});
