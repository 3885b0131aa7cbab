/* tslint:disable */
/* eslint-disable */

/**
 * Abscissae with two curves sampled on them.
 */
export class Curves {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * `max |first − second|`.
     */
    readonly discrepancy: number;
    readonly first: Float64Array;
    readonly second: Float64Array;
    readonly x: Float64Array;
}

export function convolution(a: number, b: number, shape: string, seed: number, n: number): Curves;

export function heat(a: number, b: number, shape: string, seed: number, diffusion: number, time: number): Curves;

export function transform(a: number, b: number, shape: string, seed: number, n: number): Curves;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curves_free: (a: number, b: number) => void;
    readonly convolution: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly curves_discrepancy: (a: number) => number;
    readonly curves_first: (a: number) => [number, number];
    readonly curves_second: (a: number) => [number, number];
    readonly curves_x: (a: number) => [number, number];
    readonly heat: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly transform: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
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
