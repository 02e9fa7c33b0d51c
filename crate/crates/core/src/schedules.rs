// Generated by `calibrate schedules`; do not edit by hand.

pub(crate) const TABLE_VERSION: &str = "cal-1";

pub(crate) const Q_NU: &[(f64, f64)] = &[(1.0, 16.0), (1.05, 16.0), (1.1, 16.0), (1.2, 15.0), (1.3, 14.0), (1.4, 13.0), (1.5, 12.0), (1.75, 11.0), (2.0, 10.0), (2.25, 9.0), (2.5, 9.0), (3.0, 8.0), (3.5, 8.0), (4.0, 7.0), (5.0, 7.0), (6.0, 6.0), (8.0, 6.0), (10.0, 5.0), (13.0, 5.0), (16.0, 5.0), (20.0, 4.0), (40.0, 3.0)];
pub(crate) const R_H: &[(f64, f64)] = &[(0.292, 1.7694), (0.35, 1.733), (0.4, 1.6956), (0.45, 1.6521), (0.5, 1.6021), (0.55, 1.5451), (0.6, 1.48), (0.65, 1.4059), (0.7, 1.3212), (0.75, 1.2237), (0.8, 1.11), (0.85, 0.9745), (0.9, 0.8064), (0.95, 0.5777), (1.0, 0.0)];
pub(crate) const R_KAPN: &[(f64, f64)] = &[(0.292, 37.0), (0.35, 37.0), (0.4, 37.0), (0.45, 37.0), (0.5, 36.0), (0.55, 35.0), (0.6, 34.0), (0.65, 33.0), (0.7, 31.0), (0.75, 28.0), (0.8, 25.0), (0.85, 24.0), (0.9, 21.0), (0.95, 19.0), (1.0, 15.0)];
pub(crate) const R_NU: &[(f64, f64)] = &[(0.292, 39.0), (0.35, 39.0), (0.4, 39.0), (0.45, 39.0), (0.5, 38.0), (0.55, 37.0), (0.6, 35.0), (0.65, 35.0), (0.7, 32.0), (0.75, 29.0), (0.8, 28.0), (0.85, 25.0), (0.9, 23.0), (0.95, 21.0), (1.0, 18.0)];
