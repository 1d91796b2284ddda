//! Graphviz export of a trained tree.
//!
//! Split labels decode the attribute index back into the windowing layout:
//! attribute `a` of a window of `window_steps` steps is dimension
//! `a / window_steps` at within-window step `a % window_steps`. Leaves show
//! their majority class and class-weight histogram.

use crate::tree::{HoeffdingTreeModel, TreeNode};

pub(crate) fn render(
    model: &HoeffdingTreeModel,
    window_steps: usize,
    class_names: &[String],
) -> String {
    let mut out = String::from("digraph miht {\n  node [shape=box, fontname=\"Helvetica\"];\n");
    let mut next_id = 0usize;
    render_node(&model.root, window_steps, class_names, &mut next_id, &mut out);
    out.push_str("}\n");
    out
}

fn class_label(class: usize, class_names: &[String]) -> String {
    class_names
        .get(class)
        .cloned()
        .unwrap_or_else(|| format!("class {class}"))
}

fn render_node(
    node: &TreeNode,
    window_steps: usize,
    class_names: &[String],
    next_id: &mut usize,
    out: &mut String,
) -> usize {
    let id = *next_id;
    *next_id += 1;
    match node {
        TreeNode::Leaf { stats } => {
            let histogram: Vec<String> = stats
                .class_weights
                .iter()
                .map(|w| format!("{w:.1}"))
                .collect();
            out.push_str(&format!(
                "  n{id} [label=\"{}\\nW = [{}]\"];\n",
                class_label(stats.majority_class(), class_names),
                histogram.join(", ")
            ));
        }
        TreeNode::Split {
            attribute,
            threshold,
            left,
            right,
            ..
        } => {
            let dim = attribute / window_steps.max(1);
            let step = attribute % window_steps.max(1);
            out.push_str(&format!(
                "  n{id} [label=\"dim {dim} @ step {step} <= {threshold}\"];\n"
            ));
            let left_id = render_node(left, window_steps, class_names, next_id, out);
            let right_id = render_node(right, window_steps, class_names, next_id, out);
            out.push_str(&format!("  n{id} -> n{left_id} [label=\"yes\"];\n"));
            out.push_str(&format!("  n{id} -> n{right_id} [label=\"no\"];\n"));
        }
    }
    id
}

#[cfg(test)]
mod tests {
    use crate::tree::{HoeffdingTreeModel, NbMode};

    #[test]
    fn single_leaf_renders_one_node() {
        let m = HoeffdingTreeModel::new(2, 4, 0.05, 10, None, NbMode::Product).unwrap();
        let dot = m.to_dot(2, &["a".into(), "b".into()]);
        assert!(dot.starts_with("digraph miht {"));
        assert_eq!(dot.matches("n0 [label=").count(), 1);
        assert!(!dot.contains("->"));
        assert!(dot.contains('a'), "majority label should appear: {dot}");
    }

    #[test]
    fn split_labels_decode_dimension_and_step() {
        let mut m = HoeffdingTreeModel::new(2, 6, 0.05, 20, None, NbMode::Product).unwrap();
        // attribute 4 = dim 1, step 1 for window_steps = 3
        for i in 0..400 {
            let class = i % 2;
            let mut attrs = vec![0.0; 6];
            attrs[4] = if class == 0 { -5.0 } else { 5.0 } + (i as f64 * 0.618).fract();
            m.learn_instance(&attrs, class, 1.0).unwrap();
        }
        let dot = m.to_dot(3, &[]);
        assert!(
            dot.contains("dim 1 @ step 1 <= "),
            "expected decoded split label, got:\n{dot}"
        );
        assert!(dot.contains("class 0"));
        assert!(dot.contains("[label=\"yes\"]"));
    }
}
