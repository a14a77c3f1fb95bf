/* tslint:disable */
/* eslint-disable */

/**
 * Rate curve on a log grid. `rates` holds the finite-n bound and
 * `asymptote` the large-n slope divided by sqrt(n), both in bits per use.
 */
export class Curve {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly asymptote: Float64Array;
    readonly capacityMode: boolean;
    /**
     * AWGN minimum blocklength, NaN for the BSC.
     */
    readonly nMin: number;
    readonly ns: Float64Array;
    readonly rates: Float64Array;
}

export class Operating {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    k_star: number;
    /**
     * NaN unless AWGN.
     */
    n_min: number;
    n_star: number;
    r_star: number;
    rho: number;
}

/**
 * Warden's view of a BSC(eps_dx) link at blocklength `n` when the
 * transmitter uses the largest covert sparseness with kernel P(1) = u.
 */
export class WardenView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    alpha: number;
    beta: number;
    error_sum: number;
    tau: number;
}

export function operatingPoint(kind: string, rx: number, dx: number, eps_det: number, eps_dec: number): Operating;

export function rateCurve(kind: string, rx: number, dx: number, eps_det: number, eps_dec: number, n_lo: number, n_hi: number, points: number): Curve;

export function wardenView(n: number, u: number, eps_dx: number, eps_det: number): WardenView;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curve_free: (a: number, b: number) => void;
    readonly __wbg_get_operating_k_star: (a: number) => number;
    readonly __wbg_get_operating_n_min: (a: number) => number;
    readonly __wbg_get_operating_n_star: (a: number) => number;
    readonly __wbg_get_operating_r_star: (a: number) => number;
    readonly __wbg_get_operating_rho: (a: number) => number;
    readonly __wbg_get_wardenview_alpha: (a: number) => number;
    readonly __wbg_get_wardenview_beta: (a: number) => number;
    readonly __wbg_get_wardenview_error_sum: (a: number) => number;
    readonly __wbg_get_wardenview_tau: (a: number) => number;
    readonly __wbg_operating_free: (a: number, b: number) => void;
    readonly __wbg_set_operating_k_star: (a: number, b: number) => void;
    readonly __wbg_set_operating_n_min: (a: number, b: number) => void;
    readonly __wbg_set_operating_n_star: (a: number, b: number) => void;
    readonly __wbg_set_operating_r_star: (a: number, b: number) => void;
    readonly __wbg_set_operating_rho: (a: number, b: number) => void;
    readonly __wbg_set_wardenview_alpha: (a: number, b: number) => void;
    readonly __wbg_set_wardenview_beta: (a: number, b: number) => void;
    readonly __wbg_set_wardenview_error_sum: (a: number, b: number) => void;
    readonly __wbg_set_wardenview_tau: (a: number, b: number) => void;
    readonly __wbg_wardenview_free: (a: number, b: number) => void;
    readonly curve_asymptote: (a: number) => [number, number];
    readonly curve_capacityMode: (a: number) => number;
    readonly curve_nMin: (a: number) => number;
    readonly curve_ns: (a: number) => [number, number];
    readonly curve_rates: (a: number) => [number, number];
    readonly operatingPoint: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly rateCurve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number];
    readonly wardenView: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
