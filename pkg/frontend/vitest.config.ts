import { defineConfig } from "vitest/config";

export default defineConfig({
    test: {
        environment: "node",
        globalSetup: ["tests/setup/spawn_service.ts"],
        include: ["tests/**/*.test.ts"],
        testTimeout: 30000,
    },
});
