/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_curve_free: (a: number, b: number) => void;
export const __wbg_get_operating_k_star: (a: number) => number;
export const __wbg_get_operating_n_min: (a: number) => number;
export const __wbg_get_operating_n_star: (a: number) => number;
export const __wbg_get_operating_r_star: (a: number) => number;
export const __wbg_get_operating_rho: (a: number) => number;
export const __wbg_get_wardenview_alpha: (a: number) => number;
export const __wbg_get_wardenview_beta: (a: number) => number;
export const __wbg_get_wardenview_error_sum: (a: number) => number;
export const __wbg_get_wardenview_tau: (a: number) => number;
export const __wbg_operating_free: (a: number, b: number) => void;
export const __wbg_set_operating_k_star: (a: number, b: number) => void;
export const __wbg_set_operating_n_min: (a: number, b: number) => void;
export const __wbg_set_operating_n_star: (a: number, b: number) => void;
export const __wbg_set_operating_r_star: (a: number, b: number) => void;
export const __wbg_set_operating_rho: (a: number, b: number) => void;
export const __wbg_set_wardenview_alpha: (a: number, b: number) => void;
export const __wbg_set_wardenview_beta: (a: number, b: number) => void;
export const __wbg_set_wardenview_error_sum: (a: number, b: number) => void;
export const __wbg_set_wardenview_tau: (a: number, b: number) => void;
export const __wbg_wardenview_free: (a: number, b: number) => void;
export const curve_asymptote: (a: number) => [number, number];
export const curve_capacityMode: (a: number) => number;
export const curve_nMin: (a: number) => number;
export const curve_ns: (a: number) => [number, number];
export const curve_rates: (a: number) => [number, number];
export const operatingPoint: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const rateCurve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number];
export const wardenView: (a: number, b: number, c: number, d: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
