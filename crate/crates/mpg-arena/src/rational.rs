use num_integer::Integer;
use num_rational::Ratio;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type ExactRational = Ratio<i64>;

/// Renders `q` as `"N/D"`, keeping the denominator even when it is 1.
pub fn format_rational(q: &ExactRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"N/D"` or a bare integer `"N"`. Returns `None` on malformed
/// input or a zero denominator.
pub fn parse_rational(text: &str) -> Option<ExactRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                None
            } else {
                Some(Ratio::new(n, d))
            }
        }
        None => text.parse::<i64>().ok().map(Ratio::from_integer),
    }
}

/// Computes `⌈d · q⌉` with integer arithmetic only.
pub fn ceil_mul(q: &ExactRational, d: i64) -> i64 {
    Integer::div_ceil(&(q.numer() * d), q.denom())
}
