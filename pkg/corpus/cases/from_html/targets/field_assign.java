public class Banner {
    CharSequence title;

    void refresh(String raw) {
        title = Html.fromHtml(raw);
    }
}
