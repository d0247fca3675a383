//! Sign sequences, partitions in a box, cup diagrams and the bijections among them.

mod cup;
mod partition;
mod perverse;
mod sequence;
mod tableau;

pub use cup::{
    enumerate_cup_diagrams, ext_diagram, lambda_pairs, lambda_pairs_of, Arc, CupDiagram,
};
pub use partition::{enumerate_box_partitions, BoxPartition};
pub use perverse::{adjacent, arrow, diamonds, neighbours, Diamond};
pub use sequence::{enumerate_sequences, eta, ExtSeq, HalfIndex, Sign, SignSeq};
pub use tableau::{enumerate_tableaux, TwoRowTableau};
