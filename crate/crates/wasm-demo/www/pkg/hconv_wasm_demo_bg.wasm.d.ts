/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_curves_free: (a: number, b: number) => void;
export const convolution: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const curves_discrepancy: (a: number) => number;
export const curves_first: (a: number) => [number, number];
export const curves_second: (a: number) => [number, number];
export const curves_x: (a: number) => [number, number];
export const heat: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const transform: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
