/* @ts-self-types="./covertcap_web.d.ts" */

/**
 * Rate curve on a log grid. `rates` holds the finite-n bound and
 * `asymptote` the large-n slope divided by sqrt(n), both in bits per use.
 */
export class Curve {
    static __wrap(ptr) {
        const obj = Object.create(Curve.prototype);
        obj.__wbg_ptr = ptr;
        CurveFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        CurveFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_curve_free(ptr, 0);
    }
    /**
     * @returns {Float64Array}
     */
    get asymptote() {
        const ret = wasm.curve_asymptote(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {boolean}
     */
    get capacityMode() {
        const ret = wasm.curve_capacityMode(this.__wbg_ptr);
        return ret !== 0;
    }
    /**
     * AWGN minimum blocklength, NaN for the BSC.
     * @returns {number}
     */
    get nMin() {
        const ret = wasm.curve_nMin(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {Float64Array}
     */
    get ns() {
        const ret = wasm.curve_ns(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get rates() {
        const ret = wasm.curve_rates(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
}
if (Symbol.dispose) Curve.prototype[Symbol.dispose] = Curve.prototype.free;

export class Operating {
    static __wrap(ptr) {
        const obj = Object.create(Operating.prototype);
        obj.__wbg_ptr = ptr;
        OperatingFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        OperatingFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_operating_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get k_star() {
        const ret = wasm.__wbg_get_operating_k_star(this.__wbg_ptr);
        return ret;
    }
    /**
     * NaN unless AWGN.
     * @returns {number}
     */
    get n_min() {
        const ret = wasm.__wbg_get_operating_n_min(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get n_star() {
        const ret = wasm.__wbg_get_operating_n_star(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get r_star() {
        const ret = wasm.__wbg_get_operating_r_star(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get rho() {
        const ret = wasm.__wbg_get_operating_rho(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set k_star(arg0) {
        wasm.__wbg_set_operating_k_star(this.__wbg_ptr, arg0);
    }
    /**
     * NaN unless AWGN.
     * @param {number} arg0
     */
    set n_min(arg0) {
        wasm.__wbg_set_operating_n_min(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set n_star(arg0) {
        wasm.__wbg_set_operating_n_star(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set r_star(arg0) {
        wasm.__wbg_set_operating_r_star(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set rho(arg0) {
        wasm.__wbg_set_operating_rho(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) Operating.prototype[Symbol.dispose] = Operating.prototype.free;

/**
 * Warden's view of a BSC(eps_dx) link at blocklength `n` when the
 * transmitter uses the largest covert sparseness with kernel P(1) = u.
 */
export class WardenView {
    static __wrap(ptr) {
        const obj = Object.create(WardenView.prototype);
        obj.__wbg_ptr = ptr;
        WardenViewFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        WardenViewFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_wardenview_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get alpha() {
        const ret = wasm.__wbg_get_wardenview_alpha(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get beta() {
        const ret = wasm.__wbg_get_wardenview_beta(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get error_sum() {
        const ret = wasm.__wbg_get_wardenview_error_sum(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get tau() {
        const ret = wasm.__wbg_get_wardenview_tau(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set alpha(arg0) {
        wasm.__wbg_set_wardenview_alpha(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set beta(arg0) {
        wasm.__wbg_set_wardenview_beta(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set error_sum(arg0) {
        wasm.__wbg_set_wardenview_error_sum(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set tau(arg0) {
        wasm.__wbg_set_wardenview_tau(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) WardenView.prototype[Symbol.dispose] = WardenView.prototype.free;

/**
 * @param {string} kind
 * @param {number} rx
 * @param {number} dx
 * @param {number} eps_det
 * @param {number} eps_dec
 * @returns {Operating}
 */
export function operatingPoint(kind, rx, dx, eps_det, eps_dec) {
    const ptr0 = passStringToWasm0(kind, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
    const len0 = WASM_VECTOR_LEN;
    const ret = wasm.operatingPoint(ptr0, len0, rx, dx, eps_det, eps_dec);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Operating.__wrap(ret[0]);
}

/**
 * @param {string} kind
 * @param {number} rx
 * @param {number} dx
 * @param {number} eps_det
 * @param {number} eps_dec
 * @param {number} n_lo
 * @param {number} n_hi
 * @param {number} points
 * @returns {Curve}
 */
export function rateCurve(kind, rx, dx, eps_det, eps_dec, n_lo, n_hi, points) {
    const ptr0 = passStringToWasm0(kind, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
    const len0 = WASM_VECTOR_LEN;
    const ret = wasm.rateCurve(ptr0, len0, rx, dx, eps_det, eps_dec, n_lo, n_hi, points);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Curve.__wrap(ret[0]);
}

/**
 * @param {number} n
 * @param {number} u
 * @param {number} eps_dx
 * @param {number} eps_det
 * @returns {WardenView}
 */
export function wardenView(n, u, eps_dx, eps_det) {
    const ret = wasm.wardenView(n, u, eps_dx, eps_det);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return WardenView.__wrap(ret[0]);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_30c8987f7c2ed4e2: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./covertcap_web_bg.js": import0,
    };
}

const CurveFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_curve_free(ptr, 1));
const OperatingFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_operating_free(ptr, 1));
const WardenViewFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_wardenview_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function passStringToWasm0(arg, malloc, realloc) {
    if (realloc === undefined) {
        const buf = cachedTextEncoder.encode(arg);
        const ptr = malloc(buf.length, 1) >>> 0;
        getUint8ArrayMemory0().subarray(ptr, ptr + buf.length).set(buf);
        WASM_VECTOR_LEN = buf.length;
        return ptr;
    }

    let len = arg.length;
    let ptr = malloc(len, 1) >>> 0;

    const mem = getUint8ArrayMemory0();

    let offset = 0;

    for (; offset < len; offset++) {
        const code = arg.charCodeAt(offset);
        if (code > 0x7F) break;
        mem[ptr + offset] = code;
    }
    if (offset !== len) {
        if (offset !== 0) {
            arg = arg.slice(offset);
        }
        ptr = realloc(ptr, len, len = offset + arg.length * 3, 1) >>> 0;
        const view = getUint8ArrayMemory0().subarray(ptr + offset, ptr + len);
        const ret = cachedTextEncoder.encodeInto(arg, view);

        offset += ret.written;
        ptr = realloc(ptr, len, offset, 1) >>> 0;
    }

    WASM_VECTOR_LEN = offset;
    return ptr;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

const cachedTextEncoder = new TextEncoder();

if (!('encodeInto' in cachedTextEncoder)) {
    cachedTextEncoder.encodeInto = function (arg, view) {
        const buf = cachedTextEncoder.encode(arg);
        view.set(buf);
        return {
            read: arg.length,
            written: buf.length
        };
    };
}

let WASM_VECTOR_LEN = 0;

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('covertcap_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
