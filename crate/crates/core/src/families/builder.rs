//! Assembles an oriented diagram from an unoriented planar wiring.
//!
//! Every crossing has four ports numbered counterclockwise: NE = 0, NW = 1,
//! SW = 2, SE = 3. A strand entering at port `p` leaves at `p + 2`. The
//! builder orients the strands by walking them and then picks the over
//! strand at each crossing so that the crossing gets the requested sign.

use crate::{Crossing, OrientedDiagram, Sign};

pub const NE: usize = 0;
pub const NW: usize = 1;
pub const SW: usize = 2;
pub const SE: usize = 3;

pub type Port = (usize, usize);

#[derive(Debug, Clone)]
pub struct Wiring {
    signs: Vec<Sign>,
    partner: Vec<[Option<Port>; 4]>,
}

/// The oriented diagram plus the ports through which strands enter each crossing.
#[derive(Debug, Clone)]
pub struct Built {
    pub diagram: OrientedDiagram,
    pub in_ports: Vec<[usize; 2]>,
}

impl Wiring {
    pub fn new() -> Self {
        Wiring { signs: Vec::new(), partner: Vec::new() }
    }

    pub fn add_crossing(&mut self, sign: Sign) -> usize {
        self.signs.push(sign);
        self.partner.push([None; 4]);
        self.signs.len() - 1
    }

    pub fn connect(&mut self, a: Port, b: Port) {
        for (from, to) in [(a, b), (b, a)] {
            let slot = &mut self.partner[from.0][from.1];
            assert!(slot.is_none(), "port {from:?} wired twice");
            *slot = Some(to);
        }
    }

    fn partner(&self, port: Port) -> Port {
        self.partner[port.0][port.1].unwrap_or_else(|| panic!("port {port:?} left open"))
    }

    pub fn build(&self) -> Built {
        let n = self.signs.len();
        // arc_in[x][p]: arc entering crossing x through port p.
        let mut arc_in = vec![[usize::MAX; 4]; n];
        let mut next_arc = 0;
        for x in 0..n {
            for start in [SW, SE] {
                if arc_in[x][start] != usize::MAX || arc_in[x][(start + 2) % 4] != usize::MAX {
                    continue;
                }
                let mut port = (x, start);
                loop {
                    // Enter at `port`, leave through the opposite port.
                    let arrive = self.partner((port.0, (port.1 + 2) % 4));
                    if arc_in[arrive.0][arrive.1] != usize::MAX {
                        break;
                    }
                    arc_in[arrive.0][arrive.1] = next_arc;
                    next_arc += 1;
                    port = arrive;
                }
            }
        }
        let mut arc_out = vec![[usize::MAX; 4]; n];
        for (x, ports) in arc_in.iter().enumerate() {
            for (p, &arc) in ports.iter().enumerate() {
                if arc != usize::MAX {
                    let (y, q) = self.partner((x, p));
                    arc_out[y][q] = arc;
                }
            }
        }
        let mut crossings = Vec::with_capacity(n);
        let mut in_ports = Vec::with_capacity(n);
        for x in 0..n {
            let ins: Vec<usize> = (0..4).filter(|&p| arc_in[x][p] != usize::MAX).collect();
            assert_eq!(ins.len(), 2, "each crossing is entered by two strands");
            // The two in-ports are cyclically adjacent; `b` follows `a` counterclockwise.
            let (a, b) = if (ins[0] + 1) % 4 == ins[1] { (ins[0], ins[1]) } else { (ins[1], ins[0]) };
            let (under, over) = match self.signs[x] {
                Sign::Positive => (b, a),
                Sign::Negative => (a, b),
            };
            crossings.push(Crossing {
                under_in: arc_in[x][under],
                over_in: arc_in[x][over],
                under_out: arc_out[x][(under + 2) % 4],
                over_out: arc_out[x][(over + 2) % 4],
                sign: self.signs[x],
            });
            in_ports.push([a, b]);
        }
        let diagram = OrientedDiagram::from_crossings(crossings, 0).expect("wiring yields a valid diagram");
        Built { diagram, in_ports }
    }
}

impl Default for Wiring {
    fn default() -> Self {
        Self::new()
    }
}

/// A vertical stack of crossings; its four free ends.
#[derive(Debug, Clone, Copy)]
pub struct Band {
    pub first: usize,
    pub len: usize,
    pub top_left: Port,
    pub top_right: Port,
    pub bottom_left: Port,
    pub bottom_right: Port,
}

impl Band {
    pub fn crossings(&self) -> std::ops::Range<usize> {
        self.first..self.first + self.len
    }
}

pub fn vertical_band(w: &mut Wiring, len: usize, sign: Sign) -> Band {
    assert!(len >= 1, "bands have at least one crossing");
    let first = w.signs.len();
    for _ in 0..len {
        w.add_crossing(sign);
    }
    for x in first..first + len - 1 {
        w.connect((x, SW), (x + 1, NW));
        w.connect((x, SE), (x + 1, NE));
    }
    let last = first + len - 1;
    Band {
        first,
        len,
        top_left: (first, NW),
        top_right: (first, NE),
        bottom_left: (last, SW),
        bottom_right: (last, SE),
    }
}
