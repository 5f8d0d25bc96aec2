/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_curve_free: (a: number, b: number) => void;
export const curve_lifshitz: (a: number) => [number, number];
export const curve_qed: (a: number) => [number, number];
export const curve_x: (a: number) => [number, number];
export const force_vs_frequency: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const force_vs_temperature: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const surface_curve: (a: number, b: number, c: number, d: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
