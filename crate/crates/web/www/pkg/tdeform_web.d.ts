/* tslint:disable */
/* eslint-disable */

/**
 * Runs the full pipeline on a catalog example and returns the text report
 * with the headline numbers.
 */
export function run_example(name: string, e_re: number, e_im: number): string;

/**
 * Specializes the family of a catalog example at `t = z`: multiplication
 * table, axiom check and the isomorphism test against the target algebra.
 */
export function specialize_example(name: string, e_re: number, e_im: number, z_re: number, z_im: number): string;

/**
 * Root data `α_k`, `β_k` of the contraction example at parameter `e`.
 */
export function wemyss_roots(e_re: number, e_im: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly run_example: (a: number, b: number, c: number, d: number) => [number, number];
    readonly specialize_example: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly wemyss_roots: (a: number, b: number) => [number, number];
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
