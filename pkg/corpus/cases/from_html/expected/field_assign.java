public class Banner {
    CharSequence title;

    void refresh(String raw) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            title = Html.fromHtml(raw, 0);
        } else {
            title = Html.fromHtml(raw);
        }
    }
}
