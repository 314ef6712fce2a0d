//! Published table rows for `u'` and the subsingular vectors, transcribed
//! term by term. Coefficients are parsed in the parameter space of the row.

use verma_core::{HighestWeight, Scalar, Space};

use super::Vector;

pub struct Row {
    pub label: &'static str,
    pub p: u32,
    pub r: u32,
    /// Binding of `h`, in terms of the row's parameter.
    pub h: &'static str,
    pub terms: &'static [(&'static str, &'static [u32], &'static [u32])],
}

impl Row {
    /// `hW` symbolic with `c = -24 hW/(p^2 - 1)` for `p >= 2`; `c` symbolic
    /// with `hW = 0` for `p = 1`.
    pub fn weight(&self) -> (Space, HighestWeight) {
        if self.p == 1 {
            let sp = Space::new(&["c"]).unwrap();
            let c = Scalar::param(&sp, "c").unwrap();
            let h = Scalar::parse(&sp, self.h).unwrap();
            (sp, HighestWeight::w22(c, h, Scalar::zero()).unwrap())
        } else {
            let sp = Space::new(&["hW"]).unwrap();
            let hw = Scalar::param(&sp, "hW").unwrap();
            let p = self.p as i64;
            let c = Scalar::from_int(-24) * &hw / Scalar::from_int(p * p - 1);
            let h = Scalar::parse(&sp, self.h).unwrap();
            (sp, HighestWeight::w22(c, h, hw).unwrap())
        }
    }

    pub fn vector(&self, sp: &Space) -> Vector {
        self.terms.iter().map(|(c, w, l)| ((w.to_vec(), l.to_vec()), Scalar::parse(sp, c).unwrap())).collect()
    }
}

pub const UPRIME: &[Row] = &[
    Row { label: "u' p=1", p: 1, r: 0, h: "0", terms: &[("1", &[1], &[])] },
    Row { label: "u' p=2", p: 2, r: 0, h: "0", terms: &[("1", &[2], &[]), ("-3/(4*hW)", &[1, 1], &[])] },
    Row {
        label: "u' p=3",
        p: 3,
        r: 0,
        h: "0",
        terms: &[("1", &[3], &[]), ("-2/hW", &[2, 1], &[]), ("1/hW^2", &[1, 1, 1], &[])],
    },
    Row {
        label: "u' p=4",
        p: 4,
        r: 0,
        h: "0",
        terms: &[
            ("1", &[4], &[]),
            ("-5/(2*hW)", &[3, 1], &[]),
            ("-15/(16*hW)", &[2, 2], &[]),
            ("125/(32*hW^2)", &[2, 1, 1], &[]),
            ("-375/(256*hW^3)", &[1, 1, 1, 1], &[]),
        ],
    },
    Row {
        label: "u' p=5",
        p: 5,
        r: 0,
        h: "0",
        terms: &[
            ("1", &[5], &[]),
            ("-3/hW", &[4, 1], &[]),
            ("-2/hW", &[3, 2], &[]),
            ("21/(4*hW^2)", &[3, 1, 1], &[]),
            ("3/hW^2", &[2, 2, 1], &[]),
            ("13/(2*hW^3)", &[2, 1, 1, 1], &[]),
            ("-39/(20*hW^3)", &[1, 1, 1, 1, 1], &[]),
        ],
    },
];

pub const R1: &[Row] = &[
    Row { label: "r=1 p=1", p: 1, r: 1, h: "0", terms: &[("1", &[], &[1])] },
    Row {
        label: "r=1 p=2",
        p: 2,
        r: 1,
        h: "hW + 9/4",
        terms: &[("1", &[], &[2]), ("-3/(2*hW)", &[1], &[1]), ("(12*hW+39)/(16*hW^2)", &[1, 1], &[])],
    },
    Row {
        label: "r=1 p=3",
        p: 3,
        r: 1,
        h: "hW + 20/3",
        terms: &[
            ("1", &[], &[3]),
            ("-2/hW", &[1], &[2]),
            ("-2/hW", &[2], &[1]),
            ("3/hW^2", &[1, 1], &[1]),
            ("58/(3*hW^2)", &[2, 1], &[]),
            ("-(2*hW+52)/(3*hW^3)", &[1, 1, 1], &[]),
        ],
    },
    Row {
        label: "r=1 p=4",
        p: 4,
        r: 1,
        h: "hW + 53/4",
        terms: &[
            ("1", &[], &[4]),
            ("-5/(2*hW)", &[1], &[3]),
            ("-15/(8*hW)", &[2], &[2]),
            ("125/(32*hW^2)", &[1, 1], &[2]),
            ("-5/(2*hW)", &[3], &[1]),
            ("125/(16*hW^2)", &[2, 1], &[1]),
            ("-375/(64*hW^3)", &[1, 1, 1], &[1]),
            ("(325+20*hW)/(8*hW^2)", &[3, 1], &[]),
            ("8125/(64*hW^3)", &[2, 1, 1], &[]),
            ("(975+60*hW)/(64*hW^2)", &[2, 2], &[]),
            ("1125/(256*hW^3)*(65/(4*hW)+1)", &[1, 1, 1, 1], &[]),
        ],
    },
];

pub const VACUUM_LINE: &[Row] = &[
    Row { label: "h=0", p: 1, r: 1, h: "0", terms: &[("1", &[], &[1])] },
    Row { label: "h=-1/2", p: 1, r: 2, h: "-1/2", terms: &[("1", &[], &[1, 1]), ("6/c", &[2], &[])] },
    Row {
        label: "h=-1",
        p: 1,
        r: 3,
        h: "-1",
        terms: &[("1", &[], &[1, 1, 1]), ("12/c", &[3], &[]), ("24/c", &[2], &[1])],
    },
    Row {
        label: "h=-3/2",
        p: 1,
        r: 4,
        h: "-3/2",
        terms: &[
            ("1", &[], &[1, 1, 1, 1]),
            ("36/c", &[4], &[]),
            ("60/c", &[3], &[1]),
            ("108/c^2", &[2, 2], &[]),
            ("60/c", &[2], &[1, 1]),
        ],
    },
    Row {
        label: "h=-2",
        p: 1,
        r: 5,
        h: "-2",
        terms: &[
            ("1", &[], &[1, 1, 1, 1, 1]),
            ("144/c", &[5], &[]),
            ("48/c", &[4], &[1]),
            ("2304/c^2", &[3, 2], &[]),
            ("180/c", &[3], &[1, 1]),
            ("3312/c^2", &[2, 2], &[1]),
            ("120/c", &[2], &[1, 1, 1]),
        ],
    },
];

pub const P2R2: Row = Row {
    label: "p=r=2",
    p: 2,
    r: 2,
    h: "hW + 5/4",
    terms: &[
        ("1", &[], &[2, 2]),
        ("-3/(4*hW)", &[4], &[]),
        ("-(3/(2*hW^2)+3/(2*hW))", &[3, 1], &[]),
        ("3/(2*hW)", &[3], &[1]),
        ("-3/(2*hW)", &[1], &[3]),
        ("-3/hW", &[1], &[2, 1]),
        ("3/(2*hW)+39/(4*hW^2)", &[1, 1], &[2]),
        ("9/(4*hW^2)", &[1, 1], &[1, 1]),
        ("-(9/(4*hW^2)+117/(8*hW^3))", &[1, 1, 1], &[1]),
        ("135/(32*hW^4)+153/(32*hW^3)+9/(8*hW^2)", &[1, 1, 1, 1], &[]),
    ],
};

/// Rows whose transcription is not singular (modulo `u'`), together with the
/// monomials where the computed vector differs.
pub const DISPUTED: &[&str] = &["u' p=5", "r=1 p=3", "r=1 p=4", "h=-3/2", "h=-2", "p=r=2"];
