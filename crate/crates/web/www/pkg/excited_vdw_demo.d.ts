/* tslint:disable */
/* eslint-disable */

/**
 * Abscissae and two value series; missing values are NaN.
 */
export class Curve {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly lifshitz: Float64Array;
    readonly qed: Float64Array;
    readonly x: Float64Array;
}

export function force_vs_frequency(temperature_ratio: number, gamma_ratio: number, min: number, max: number, points: number): Curve;

export function force_vs_temperature(omega_ratio: number, gamma_ratio: number, min: number, max: number, points: number): Curve;

export function surface_curve(gamma_ratio: number, min: number, max: number, points: number): Curve;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curve_free: (a: number, b: number) => void;
    readonly curve_lifshitz: (a: number) => [number, number];
    readonly curve_qed: (a: number) => [number, number];
    readonly curve_x: (a: number) => [number, number];
    readonly force_vs_frequency: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly force_vs_temperature: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly surface_curve: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
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
