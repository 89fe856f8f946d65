/* tslint:disable */
/* eslint-disable */

/**
 * Budgeted convertibility; the verdict is `Equal`, `Distinct` or `Unknown`.
 */
export function equal(left: string, right: string, calculus: string, max_steps: number): string;

/**
 * Normalizes a term; `calculus` is `"lm"` or `"scl"`.
 */
export function reduce(src: string, calculus: string, max_steps: number): string;

/**
 * `"to-scl"` reads a Λμ-term, `"to-lm"` an SCL term.
 */
export function translate(src: string, direction: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly equal: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
    readonly reduce: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly translate: (a: number, b: number, c: number, d: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
