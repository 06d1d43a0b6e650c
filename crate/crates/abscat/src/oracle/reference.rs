//! Extended-precision Bessel reference, independent of the f64 kernel.
//!
//! J_nu comes from the ascending power series evaluated in arbitrary
//! precision; Y_nu from the connection formula
//! (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi) for non-integer order and from
//! the logarithmic series at integer order.  Working precision carries
//! guard digits for the alternating-series cancellation (which grows like
//! e^x) and for near-integer orders, so results are correct to the
//! requested number of significant digits.

use crate::error::{Error, Result};
use astro_float::{BigFloat, Consts, RoundingMode, Sign};

const RM: RoundingMode = RoundingMode::ToEven;

/// Practical domain bounds for the series evaluation.
pub const MAX_NU: f64 = 45.0;
pub const MAX_X: f64 = 120.0;

/// Extended-precision evaluation context.
pub struct Reference {
    p: usize,
    digits: u32,
    cc: Consts,
}

impl Reference {
    /// `digits` of delivered accuracy (20..=60); `x` and `nu` scale the
    /// internal guard digits.
    pub fn new(digits: u32, nu: f64, x: f64) -> Result<Self> {
        if !(20..=60).contains(&digits) || !(0.0..=MAX_NU).contains(&nu) || x.is_nan() || x <= 0.0 || x > MAX_X
        {
            return Err(Error::ReferenceRange { nu, x });
        }
        // cancellation guard: the J series peaks near e^x; near-integer
        // orders lose log10(1/|nu - round(nu)|) digits in the connection
        // formula
        let frac = (nu - nu.round()).abs();
        let near_int_guard = if frac == 0.0 || frac > 1e-3 {
            0.0
        } else {
            -frac.log10()
        };
        let total = digits as f64 + 0.46 * x + near_int_guard + 25.0;
        let p = (total * 3.3220) as usize + 64;
        let cc = Consts::new().map_err(|e| Error::BigFloat {
            what: format!("{e:?}"),
        })?;
        Ok(Reference { p, digits, cc })
    }

    fn f(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.p)
    }

    fn usize_f(&self, v: usize) -> BigFloat {
        BigFloat::from_word(v as u64, self.p)
    }

    fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    /// Significand comparison scale: true if |t| < |acc| * 2^-(p+8).
    fn negligible(t: &BigFloat, acc: &BigFloat, p: usize) -> bool {
        match (t.exponent(), acc.exponent()) {
            (Some(te), Some(ae)) => (te as i64) < ae as i64 - (p as i64) - 8,
            (None, _) => t.is_zero(),
            _ => false,
        }
    }

    /// Spouge's approximation for Gamma(z), z > 0.
    fn gamma_big(&mut self, z: &BigFloat) -> BigFloat {
        let p = self.p;
        let a = (self.p as f64 / 3.322 * 1.26) as usize + 6;
        let one = self.usize_f(1);
        let two_pi = self.pi().mul(&self.f(2.0), p, RM);
        let mut sum = two_pi.sqrt(p, RM);
        let mut fact = one.clone(); // (k-1)!
        let e1 = one.exp(p, RM, &mut self.cc);
        let mut epow = one.clone(); // e^{a-k} built multiplicatively
        // iterate k = a-1 down: easier ascending with e^{a-k} = e^{a-1} / e^{k-1}
        let mut ea = one.clone();
        for _ in 0..(a - 1) {
            ea = ea.mul(&e1, p, RM);
        }
        for k in 1..a {
            if k > 1 {
                fact = fact.mul(&self.usize_f(k - 1), p, RM);
                epow = epow.mul(&e1, p, RM);
            }
            // c_k = (-1)^{k-1} (a-k)^{k-1/2} e^{a-k} / (k-1)!
            let amk = self.usize_f(a - k);
            let mut powv = one.clone();
            for _ in 0..(k - 1) {
                powv = powv.mul(&amk, p, RM);
            }
            powv = powv.mul(&amk.sqrt(p, RM), p, RM);
            let eamk = ea.div(&epow, p, RM);
            let mut ck = powv.mul(&eamk, p, RM).div(&fact, p, RM);
            if k % 2 == 0 {
                ck = ck.neg();
            }
            let zm1pk = z.sub(&one, p, RM).add(&self.usize_f(k), p, RM);
            sum = sum.add(&ck.div(&zm1pk, p, RM), p, RM);
        }
        // (z - 1 + a)^{z - 1/2} e^{-(z - 1 + a)}
        let t = z.sub(&one, p, RM).add(&self.usize_f(a), p, RM);
        let zmh = z.sub(&self.f(0.5), p, RM);
        let lg = t.ln(p, RM, &mut self.cc).mul(&zmh, p, RM).sub(&t, p, RM);
        lg.exp(p, RM, &mut self.cc).mul(&sum, p, RM)
    }

    /// Euler-Mascheroni constant by the Brent-McMillan B1 scheme:
    /// gamma = S(n)/I0(n) - ln n with error O(e^{-4n}).
    fn euler_gamma_big(&mut self) -> BigFloat {
        let p = self.p;
        let digits = p as f64 / 3.322;
        let n = (digits * std::f64::consts::LN_10 / 4.0) as usize + 3;
        let nf = self.usize_f(n);
        let one = self.usize_f(1);
        let mut term = one.clone(); // (n^k / k!)^2
        let mut harmonic = BigFloat::from_word(0, p);
        let mut i0 = one.clone();
        let mut s = BigFloat::from_word(0, p);
        for k in 1..100 * n {
            let kf = self.usize_f(k);
            let ratio = nf.div(&kf, p, RM);
            term = term.mul(&ratio, p, RM).mul(&ratio, p, RM);
            harmonic = harmonic.add(&kf.reciprocal(p, RM), p, RM);
            s = s.add(&term.mul(&harmonic, p, RM), p, RM);
            i0 = i0.add(&term, p, RM);
            if Self::negligible(&term, &i0, p) {
                break;
            }
        }
        s.div(&i0, p, RM).sub(&nf.ln(p, RM, &mut self.cc), p, RM)
    }

    /// Ascending series J_nu(x) = (x/2)^nu / Gamma(nu+1) sum_j (-(x/2)^2)^j / (j! (nu+1)_j).
    fn j_big(&mut self, nu: &BigFloat, x: f64) -> BigFloat {
        let p = self.p;
        let half_x = self.f(0.5 * x);
        let neg_q2 = half_x.mul(&half_x, p, RM).neg();
        let one = self.usize_f(1);
        let mut term = one.clone();
        let mut sum = one.clone();
        for j in 1..10_000 {
            let jf = self.usize_f(j);
            let nupj = nu.add(&jf, p, RM);
            term = term.mul(&neg_q2, p, RM).div(&jf, p, RM).div(&nupj, p, RM);
            sum = sum.add(&term, p, RM);
            if Self::negligible(&term, &one, p) {
                break;
            }
        }
        let g = self.gamma_big(&nu.add(&one, p, RM));
        let pref = half_x
            .pow(nu, p, RM, &mut self.cc)
            .div(&g, p, RM);
        pref.mul(&sum, p, RM)
    }

    /// J_{-nu} for non-integer nu, with 1/Gamma(1-nu) = sin(pi nu) Gamma(nu) / pi
    /// so that only positive gamma arguments appear.
    fn j_neg_big(&mut self, nu: &BigFloat, x: f64) -> BigFloat {
        let p = self.p;
        let half_x = self.f(0.5 * x);
        let neg_q2 = half_x.mul(&half_x, p, RM).neg();
        let one = self.usize_f(1);
        let mut term = one.clone();
        let mut sum = one.clone();
        for j in 1..10_000 {
            let jf = self.usize_f(j);
            let jmnu = jf.sub(nu, p, RM); // (1-nu)_j factors: (j - nu)
            term = term.mul(&neg_q2, p, RM).div(&jf, p, RM).div(&jmnu, p, RM);
            sum = sum.add(&term, p, RM);
            if Self::negligible(&term, &one, p) {
                break;
            }
        }
        let pi = self.pi();
        let sin_pinu = nu.mul(&pi, p, RM).sin(p, RM, &mut self.cc);
        let recip_gamma_1mnu = sin_pinu
            .mul(&self.gamma_big(nu), p, RM)
            .div(&pi, p, RM);
        let pref = half_x
            .pow(&nu.neg(), p, RM, &mut self.cc)
            .mul(&recip_gamma_1mnu, p, RM);
        pref.mul(&sum, p, RM)
    }

    /// Y_n(x) at integer order n >= 0 from the logarithmic series.
    fn y_int_big(&mut self, n: usize, x: f64) -> BigFloat {
        let p = self.p;
        let one = self.usize_f(1);
        let half_x = self.f(0.5 * x);
        let q2 = half_x.mul(&half_x, p, RM);
        let pi = self.pi();
        let gamma_e = self.euler_gamma_big();

        // (2/pi) ln(x/2) J_n(x)
        let jn = self.j_big(&self.usize_f(n).clone(), x);
        let log_part = half_x
            .ln(p, RM, &mut self.cc)
            .mul(&jn, p, RM)
            .mul(&self.f(2.0), p, RM)
            .div(&pi, p, RM);

        // -(1/pi) sum_{k=0}^{n-1} (n-k-1)!/k! (x/2)^{2k-n}
        let mut finite = BigFloat::from_word(0, p);
        if n > 0 {
            let mut fact_nk = one.clone(); // (n-k-1)! at k = n-1 -> 0! ; build downward instead
            // precompute (n-1)! then divide
            for j in 1..n {
                fact_nk = fact_nk.mul(&self.usize_f(j), p, RM);
            }
            let mut kfact = one.clone();
            let mut qpow = half_x.pow(&self.f(-(n as f64)), p, RM, &mut self.cc);
            for k in 0..n {
                if k > 0 {
                    kfact = kfact.mul(&self.usize_f(k), p, RM);
                    // (n-k-1)! = (n-k)!/(n-k)
                    fact_nk = fact_nk.div(&self.usize_f(n - k), p, RM);
                    qpow = qpow.mul(&q2, p, RM);
                }
                finite = finite.add(&fact_nk.div(&kfact, p, RM).mul(&qpow, p, RM), p, RM);
            }
            finite = finite.div(&pi, p, RM);
        }

        // -(1/pi) sum_k (-1)^k (H_k + H_{n+k} - 2 gamma) / (k! (n+k)!) (x/2)^{2k+n}
        let mut hk = BigFloat::from_word(0, p);
        let mut hnk = BigFloat::from_word(0, p);
        for j in 1..=n {
            hnk = hnk.add(&self.usize_f(j).reciprocal(p, RM), p, RM);
        }
        let mut kfact = one.clone();
        let mut nkfact = one.clone();
        for j in 1..=n {
            nkfact = nkfact.mul(&self.usize_f(j), p, RM);
        }
        let mut qpow = if n == 0 {
            one.clone()
        } else {
            let mut t = one.clone();
            for _ in 0..n {
                t = t.mul(&half_x, p, RM);
            }
            t
        };
        let two_gamma = gamma_e.mul(&self.f(2.0), p, RM);
        let mut series = BigFloat::from_word(0, p);
        let mut sign = 1.0;
        for k in 0..10_000usize {
            if k > 0 {
                let kf = self.usize_f(k);
                hk = hk.add(&kf.reciprocal(p, RM), p, RM);
                hnk = hnk.add(&self.usize_f(n + k).reciprocal(p, RM), p, RM);
                kfact = kfact.mul(&kf, p, RM);
                nkfact = nkfact.mul(&self.usize_f(n + k), p, RM);
                qpow = qpow.mul(&q2, p, RM);
                sign = -sign;
            }
            let psi_sum = hk.add(&hnk, p, RM).sub(&two_gamma, p, RM);
            let mut t = psi_sum
                .mul(&qpow, p, RM)
                .div(&kfact, p, RM)
                .div(&nkfact, p, RM);
            if sign < 0.0 {
                t = t.neg();
            }
            series = series.add(&t, p, RM);
            if k > 2 && Self::negligible(&qpow.div(&kfact, p, RM).div(&nkfact, p, RM), &one, p) {
                break;
            }
        }
        series = series.div(&pi, p, RM);

        log_part.sub(&finite, p, RM).sub(&series, p, RM)
    }

    /// (J_nu(x), Y_nu(x)) at the context precision, rounded to `digits`.
    pub fn eval(&mut self, nu: f64, x: f64) -> Result<(BigFloat, BigFloat)> {
        let p = self.p;
        if !(0.0..=MAX_NU).contains(&nu) || x.is_nan() || x <= 0.0 || x > MAX_X {
            return Err(Error::ReferenceRange { nu, x });
        }
        let nu_bf = self.f(nu);
        let j = self.j_big(&nu_bf, x);
        let y = if nu == nu.round() {
            self.y_int_big(nu as usize, x)
        } else {
            // connection formula
            let pi = self.pi();
            let pinu = nu_bf.mul(&pi, p, RM);
            let cosv = pinu.cos(p, RM, &mut self.cc);
            let sinv = pinu.sin(p, RM, &mut self.cc);
            let jneg = self.j_neg_big(&nu_bf, x);
            j.mul(&cosv, p, RM).sub(&jneg, p, RM).div(&sinv, p, RM)
        };
        let out_p = (self.digits as f64 * 3.3220) as usize + 8;
        let mut j = j;
        let mut y = y;
        j.set_precision(out_p, RM).map_err(|e| Error::BigFloat {
            what: format!("{e:?}"),
        })?;
        y.set_precision(out_p, RM).map_err(|e| Error::BigFloat {
            what: format!("{e:?}"),
        })?;
        if j.is_nan() || y.is_nan() {
            return Err(Error::BigFloat {
                what: format!("NaN in reference at nu={nu}, x={x}"),
            });
        }
        Ok((j, y))
    }
}

/// High-precision (J_nu(x), Y_nu(x)), correct to `digits` significant digits.
pub fn bessel_reference(nu: f64, x: f64, digits: u32) -> Result<(BigFloat, BigFloat)> {
    Reference::new(digits, nu, x)?.eval(nu, x)
}

/// Same, rounded to f64 for kernel comparisons.
pub fn bessel_reference_f64(nu: f64, x: f64, digits: u32) -> Result<(f64, f64)> {
    let (j, y) = bessel_reference(nu, x, digits)?;
    Ok((to_f64(&j), to_f64(&y)))
}

/// Round a BigFloat to f64 through its raw parts (the crate offers no
/// public conversion).  Mantissa words are little-endian and normalized,
/// value = sign * (mantissa / 2^len) * 2^exponent.
pub fn to_f64(bf: &BigFloat) -> f64 {
    if bf.is_nan() {
        return f64::NAN;
    }
    if bf.is_zero() {
        return 0.0;
    }
    if bf.is_inf_pos() {
        return f64::INFINITY;
    }
    if bf.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    let (words, _len, sign, e, _) = bf.as_raw_parts().expect("finite value");
    let top = *words.last().expect("nonempty mantissa") as f64;
    let lo = if words.len() > 1 {
        words[words.len() - 2] as f64
    } else {
        0.0
    };
    let frac = top * 2f64.powi(-64) + lo * 2f64.powi(-128);
    let v = frac * 2f64.powi(e);
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}
