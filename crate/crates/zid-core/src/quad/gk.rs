//! 10–21 Gauss–Kronrod panel rule.

use super::dd::Acc;

// Abscissae of the 21-point Kronrod rule (positive half, descending).
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

// Weights of the 21-point Kronrod rule.
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

// Weights of the embedded 10-point Gauss rule.
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * res_abs;
        if min_err > scaled {
            scaled = min_err;
        }
    }
    scaled
}

/// One Gauss–Kronrod 10–21 panel over [a, b]; returns (value, error estimate).
pub fn qk21<E>(f: &mut impl FnMut(f64) -> Result<f64, E>, a: f64, b: f64, dd: bool)
    -> Result<(f64, f64), E>
{
    let centr = 0.5 * (a + b);
    let hlgth = 0.5 * (b - a);
    let fc = f(centr)?;

    let mut fv1 = [0.0f64; 10];
    let mut fv2 = [0.0f64; 10];
    let mut resg = 0.0;
    let mut resk = Acc::new(dd);
    resk.add(WGK[10] * fc);
    let mut resabs = (WGK[10] * fc).abs();

    for j in 0..5 {
        let jtw = 2 * j + 1;
        let absc = hlgth * XGK[jtw];
        let f1 = f(centr - absc)?;
        let f2 = f(centr + absc)?;
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        let fsum = f1 + f2;
        resg += WG[j] * fsum;
        resk.add(WGK[jtw] * fsum);
        resabs += WGK[jtw] * (f1.abs() + f2.abs());
    }
    for j in 0..5 {
        let jtwm1 = 2 * j;
        let absc = hlgth * XGK[jtwm1];
        let f1 = f(centr - absc)?;
        let f2 = f(centr + absc)?;
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        let fsum = f1 + f2;
        resk.add(WGK[jtwm1] * fsum);
        resabs += WGK[jtwm1] * (f1.abs() + f2.abs());
    }

    let resk_val = resk.value();
    let reskh = 0.5 * resk_val;
    let mut resasc = WGK[10] * (fc - reskh).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv1[j] - reskh).abs() + (fv2[j] - reskh).abs());
    }

    let value = resk_val * hlgth;
    let resabs = resabs * hlgth.abs();
    let resasc = resasc * hlgth.abs();
    let err = rescale_error((resk_val - resg) * hlgth, resabs, resasc);
    Ok((value, err))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_low_degree_polynomials() {
        // 21-point Kronrod is exact far beyond cubic
        let mut f = |x: f64| -> Result<f64, ()> { Ok(x * x * x - 2.0 * x + 1.0) };
        let (v, e) = qk21(&mut f, 0.0, 2.0, false).unwrap();
        assert!((v - 2.0).abs() < 1e-14 && e < 1e-12);
    }

    #[test]
    fn smooth_transcendental() {
        let mut f = |x: f64| -> Result<f64, ()> { Ok(x.sin()) };
        let (v, _) = qk21(&mut f, 0.0, std::f64::consts::PI, false).unwrap();
        assert!((v - 2.0).abs() < 1e-13);
    }
}
