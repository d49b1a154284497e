use addbasis::io::Preset;
use addbasis::segments::{parallelogram, square};
use addbasis::{build_basis, build_segment, simple_basis, IntSet, SegmentKind};

fn seg(kind: SegmentKind, t: u64) -> IntSet {
    build_segment(kind, t).unwrap()
}

#[test]
fn squares_inside_v_plus_h_and_v_plus_s() {
    for t in 2..=32 {
        let q = square(t).unwrap();
        let v = seg(SegmentKind::V, t);
        assert!(q.is_subset(&v.sumset(&seg(SegmentKind::H, t)).unwrap()), "t={t}");
        assert!(q.is_subset(&v.sumset(&seg(SegmentKind::S, t)).unwrap()), "t={t}");
    }
}

#[test]
fn consecutive_parallelograms_contain_the_next_square() {
    for t in 2..=32 {
        let p = parallelogram(t).unwrap();
        let both = p.union(&p.translate((t * t) as i64).unwrap());
        let q = square(t).unwrap().translate((t * t) as i64).unwrap();
        assert!(q.is_subset(&both), "t={t}");
    }
}

#[test]
fn segment_sizes_and_self_sums() {
    for t in 2..=32 {
        assert_eq!(seg(SegmentKind::V, t).len() as u64, t + 1);
        assert_eq!(seg(SegmentKind::H, t).len() as u64, t);
        assert_eq!(seg(SegmentKind::S, t).len() as u64, t);
        for kind in SegmentKind::ALL {
            let s = seg(kind, t);
            assert!(s.sumset(&s).unwrap().len() as u64 <= 2 * t + 1, "{kind} t={t}");
        }
    }
}

#[test]
fn basis_sizes() {
    let p42 = Preset::Kohonen42.placement().unwrap();
    for t in 2..=32 {
        assert_eq!(build_basis(&p42, t).unwrap().len() as u64, 42 * t + 7, "t={t}");
        for preset in [Preset::Mrose7, Preset::Klove7] {
            let p = preset.placement().unwrap();
            assert!(build_basis(&p, t).unwrap().len() as u64 <= 7 * (t + 1));
        }
    }
}

#[test]
fn simple_basis_reaches_t_squared_plus_t() {
    for t in 2..=32 {
        let b = simple_basis(t).unwrap();
        assert_eq!(b.len() as u64, 2 * t);
        assert!(b.range_n().unwrap() >= t * t + t, "t={t}");
    }
}
